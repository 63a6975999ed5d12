#include "mcg/morphism.hpp"

namespace mcg {

Morphism::Morphism(Alphabet domain, Alphabet codomain, std::vector<Word> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != domain_.rank())
        throw MorphismError("image count does not match domain rank");
    for (const auto& im : images_)
        for (Letter x : im.letters())
            if (std::abs(x) > codomain_.rank())
                throw MorphismError("image letter out of codomain range");
}

Morphism Morphism::identity(const Alphabet& a) {
    std::vector<Word> imgs;
    imgs.reserve(a.rank());
    for (int i = 1; i <= a.rank(); ++i) imgs.push_back(Word::letter(i));
    return Morphism(a, a, std::move(imgs));
}

Word Morphism::apply(const Word& w) const {
    std::vector<Letter> out;
    for (Letter x : w.letters()) {
        int idx = std::abs(x) - 1;
        if (idx >= domain_.rank()) throw MorphismError("word letter outside domain");
        const Word& im = images_[idx];
        if (x > 0) {
            for (Letter y : im.letters()) {
                if (!out.empty() && out.back() == -y) out.pop_back();
                else out.push_back(y);
            }
        } else {
            for (auto it = im.letters().rbegin(); it != im.letters().rend(); ++it) {
                Letter y = -*it;
                if (!out.empty() && out.back() == -y) out.pop_back();
                else out.push_back(y);
            }
        }
    }
    return Word(std::move(out));
}

bool Morphism::is_identity() const {
    if (domain_ != codomain_) return false;
    for (int i = 0; i < domain_.rank(); ++i)
        if (images_[i] != Word::letter(i + 1)) return false;
    return true;
}

Morphism compose(const Morphism& f, const Morphism& g) {
    if (g.codomain() != f.domain())
        throw MorphismError("compose: alphabet mismatch");
    std::vector<Word> imgs;
    imgs.reserve(g.images().size());
    for (const auto& im : g.images()) imgs.push_back(f.apply(im));
    return Morphism(g.domain(), f.codomain(), std::move(imgs));
}

Matrix abelianization_matrix(const Morphism& m) {
    int rows = m.codomain().rank();
    int cols = m.domain().rank();
    Matrix out(rows, std::vector<long long>(cols, 0));
    for (int j = 0; j < cols; ++j) {
        auto v = abelianize(m.image(j), rows);
        for (int i = 0; i < rows; ++i) out[i][j] = v[i];
    }
    return out;
}

long long det(Matrix m) {
    // Bareiss fraction-free elimination
    int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    long long prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (m[r][k] != 0) { piv = r; break; }
            if (piv < 0) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

Automorphism::Automorphism(Morphism forward, Morphism backward)
    : fwd_(std::move(forward)), bwd_(std::move(backward)) {
    if (fwd_.domain() != fwd_.codomain() || bwd_.domain() != bwd_.codomain() ||
        fwd_.domain() != bwd_.domain())
        throw MorphismError("automorphism tables must share one alphabet");
    if (!compose(fwd_, bwd_).is_identity() || !compose(bwd_, fwd_).is_identity())
        throw MorphismError("inverse certificate failed");
}

Automorphism Automorphism::identity(const Alphabet& a) {
    return Automorphism(Morphism::identity(a), Morphism::identity(a));
}

Automorphism Automorphism::inverse() const { return Automorphism(bwd_, fwd_); }

Automorphism compose(const Automorphism& f, const Automorphism& g) {
    return Automorphism(compose(f.forward(), g.forward()),
                        compose(g.backward(), f.backward()));
}

Automorphism power(const Automorphism& f, int n) {
    Automorphism out = Automorphism::identity(f.alphabet());
    Automorphism base = n >= 0 ? f : f.inverse();
    for (int k = 0; k < std::abs(n); ++k) out = compose(base, out);
    return out;
}

std::optional<Word> inner_equal(const Automorphism& f, const Automorphism& g) {
    if (f.alphabet() != g.alphabet())
        throw MorphismError("inner_equal: alphabet mismatch");
    const Alphabet& a = f.alphabet();
    Morphism h = compose(f.forward(), g.backward()); // h = f o g^-1, want h = conj_u
    Word x1 = Word::letter(1);
    Word v1 = h.apply(x1);
    auto u0 = solve_conjugator(x1, v1);
    if (!u0) return std::nullopt;
    // full solution set u0 * x1^k; bound |k| by word lengths
    Word v2 = a.rank() > 1 ? h.apply(Word::letter(2)) : v1;
    int bound = static_cast<int>(v2.size() + 1 + 2 * u0->size()) + 2;
    auto check = [&](const Word& u) {
        for (int i = 1; i <= a.rank(); ++i) {
            Word xi = Word::letter(i);
            if (h.apply(xi) != conjugate(xi, u)) return false;
        }
        return true;
    };
    for (int k = 0; k <= bound; ++k) {
        for (int s : {1, -1}) {
            if (k == 0 && s == -1) continue;
            Word u = multiply(*u0, power(x1, s * k));
            if (check(u)) return u;
        }
    }
    return std::nullopt;
}

} // namespace mcg

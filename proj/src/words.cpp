#include "mcg/words.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace mcg {

Alphabet::Alphabet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw WordError("alphabet rank must be >= 1");
    std::set<std::string> seen;
    for (const auto& l : labels_) {
        if (l.empty()) throw WordError("empty symbol label");
        if (!seen.insert(l).second) throw WordError("duplicate symbol label: " + l);
    }
}

int Alphabet::find(const std::string& label) const {
    for (size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<int>(i);
    return -1;
}

Word::Word(std::vector<Letter> letters) {
    letters_.reserve(letters.size());
    for (Letter x : letters) {
        if (x == 0) throw WordError("zero letter");
        if (!letters_.empty() && letters_.back() == -x)
            letters_.pop_back();
        else
            letters_.push_back(x);
    }
}

Word reduce(const std::vector<Letter>& raw) { return Word(raw); }

Word multiply(const Word& u, const Word& v) {
    Word out;
    out.letters_ = u.letters_;
    out.letters_.reserve(u.size() + v.size());
    for (Letter x : v.letters_) {
        if (!out.letters_.empty() && out.letters_.back() == -x)
            out.letters_.pop_back();
        else
            out.letters_.push_back(x);
    }
    return out;
}

Word invert(const Word& w) {
    Word out;
    out.letters_.reserve(w.size());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
        out.letters_.push_back(-*it);
    return out;
}

Word conjugate(const Word& w, const Word& c) {
    return multiply(multiply(c, w), invert(c));
}

Word power(const Word& w, int n) {
    Word base = n >= 0 ? w : invert(w);
    Word out;
    for (int k = 0; k < std::abs(n); ++k) out = multiply(out, base);
    return out;
}

CyclicReduction cyclic_reduce(const Word& w) {
    std::vector<Letter> core(w.letters());
    std::vector<Letter> conj;
    size_t lo = 0, hi = core.size();
    while (hi - lo >= 2 && core[lo] == -core[hi - 1]) {
        conj.push_back(core[lo]);
        ++lo;
        --hi;
    }
    return {Word(std::vector<Letter>(core.begin() + lo, core.begin() + hi)),
            Word(conj)};
}

std::optional<Word> solve_conjugator(const Word& u, const Word& v) {
    auto ru = cyclic_reduce(u);
    auto rv = cyclic_reduce(v);
    if (ru.core.size() != rv.core.size()) return std::nullopt;
    if (ru.core.empty()) return Word();
    const auto& cu = ru.core.letters();
    size_t n = cu.size();
    for (size_t k = 0; k < n; ++k) {
        bool match = true;
        for (size_t t = 0; t < n; ++t) {
            if (cu[(k + t) % n] != rv.core[t]) { match = false; break; }
        }
        if (match) {
            // rot_k(core_u) = p^-1 core_u p with p = first k letters
            Word p(std::vector<Letter>(cu.begin(), cu.begin() + k));
            Word c = multiply(multiply(rv.conjugator, invert(p)), invert(ru.conjugator));
            return c;
        }
    }
    return std::nullopt;
}

std::string print_word(const Alphabet& a, const Word& w) {
    if (w.empty()) return "";
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << ' ';
        Letter x = w[i];
        int idx = std::abs(x) - 1;
        if (idx >= a.rank()) throw WordError("letter out of range for alphabet");
        os << a.label(idx);
        if (x < 0) os << "^-1";
    }
    return os.str();
}

Word parse_word(const Alphabet& a, const std::string& text) {
    std::vector<Letter> letters;
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*'))
            ++i;
    };
    skip();
    while (i < text.size()) {
        size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) &&
               text[j] != '*' && text[j] != '^')
            ++j;
        std::string sym = text.substr(i, j - i);
        int idx = a.find(sym);
        if (idx < 0) throw WordError("unknown symbol '" + sym + "'");
        i = j;
        long exp = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            size_t k = i;
            if (k < text.size() && (text[k] == '-' || text[k] == '+')) ++k;
            size_t d0 = k;
            while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
            if (k == d0) throw WordError("missing exponent after '^'");
            exp = std::stol(text.substr(i, k - i));
            i = k;
        }
        Letter base = static_cast<Letter>(idx + 1);
        for (long t = 0; t < std::labs(exp); ++t)
            letters.push_back(exp >= 0 ? base : -base);
        skip();
    }
    return Word(letters);
}

std::vector<long long> abelianize(const Word& w, int rank) {
    std::vector<long long> v(rank, 0);
    for (Letter x : w.letters()) {
        int idx = std::abs(x) - 1;
        if (idx >= rank) throw WordError("letter out of range");
        v[idx] += x > 0 ? 1 : -1;
    }
    return v;
}

} // namespace mcg

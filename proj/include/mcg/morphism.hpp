#pragma once

#include "mcg/words.hpp"

#include <optional>

namespace mcg {

using Matrix = std::vector<std::vector<long long>>;

// Free-group morphism given by basis images.  Domain and codomain carry
// their own alphabets; images are words over the codomain.
class Morphism {
public:
    Morphism(Alphabet domain, Alphabet codomain, std::vector<Word> images);

    static Morphism identity(const Alphabet& a);

    const Alphabet& domain() const { return domain_; }
    const Alphabet& codomain() const { return codomain_; }
    const std::vector<Word>& images() const { return images_; }
    const Word& image(int index) const { return images_.at(index); }

    Word apply(const Word& w) const;
    bool is_identity() const;

    bool operator==(const Morphism& o) const {
        return domain_ == o.domain_ && codomain_ == o.codomain_ && images_ == o.images_;
    }

private:
    Alphabet domain_;
    Alphabet codomain_;
    std::vector<Word> images_;
};

// (f o g)(x) = f(g(x))
Morphism compose(const Morphism& f, const Morphism& g);

// column j = exponent vector of image of generator j
Matrix abelianization_matrix(const Morphism& m);

long long det(Matrix m); // exact integer determinant (fraction-free)

// An automorphism is a certified pair: forward and backward tables whose
// composites fix every basis letter.  Construction checks the certificate.
class Automorphism {
public:
    Automorphism(Morphism forward, Morphism backward);

    static Automorphism identity(const Alphabet& a);

    const Morphism& forward() const { return fwd_; }
    const Morphism& backward() const { return bwd_; }
    const Alphabet& alphabet() const { return fwd_.domain(); }

    Word apply(const Word& w) const { return fwd_.apply(w); }
    Word apply_inverse(const Word& w) const { return bwd_.apply(w); }

    Automorphism inverse() const;

    bool operator==(const Automorphism& o) const { return fwd_ == o.fwd_; }

private:
    Morphism fwd_;
    Morphism bwd_;
};

Automorphism compose(const Automorphism& f, const Automorphism& g);
Automorphism power(const Automorphism& f, int n);

// Conjugator u with f(x) = u g(x) u^-1 for every basis letter, if any.
std::optional<Word> inner_equal(const Automorphism& f, const Automorphism& g);

class MorphismError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace mcg

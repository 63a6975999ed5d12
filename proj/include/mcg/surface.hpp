#pragma once

#include "mcg/morphism.hpp"

namespace mcg {

// Fixed model of the genus-g surface with two punctures P1, P2, bounding the
// handlebody with a trivial arc between the punctures.  Basis a1,b1,...,ag,bg,z:
//   a_i  runs through the i-th handle,
//   b_i  is the meridian of the i-th handle (bounds a disk in the handlebody),
//   z    is a small loop about P1.
// peripheral2 is pinned to ([a1,b1]...[ag,bg] z)^-1.
class SurfaceModel {
public:
    explicit SurfaceModel(int genus);

    int genus() const { return genus_; }
    const Alphabet& alphabet() const { return alphabet_; }
    int rank() const { return alphabet_.rank(); }

    // 1-based letter indices
    int a(int i) const { return 2 * i - 1; }
    int b(int i) const { return 2 * i; }
    int z() const { return rank(); }

    Word a_word(int i) const { return Word::letter(a(i)); }
    Word b_word(int i) const { return Word::letter(b(i)); }
    Word z_word() const { return Word::letter(z()); }
    // [a_i, b_i]
    Word d_word(int i) const;

    const Word& peripheral1() const { return peripheral1_; }
    const Word& peripheral2() const { return peripheral2_; }
    std::vector<Word> meridians() const;

    enum class Mode { Closed, Arc };

    // a_i -> x_i, b_i -> 1, z -> 1   (rank g)
    const Morphism& quotient_to_handlebody() const { return q_closed_; }
    // a_i -> x_i, b_i -> 1, z -> t   (rank g+1)
    const Morphism& quotient_to_arc_complement() const { return q_arc_; }

    bool in_meridian_kernel(const Word& w, Mode mode) const;

    struct CertReport {
        bool peripheral1_ok = false;
        bool peripheral2_ok = false;
        Word conjugator1; // f(z) = c1 z c1^-1
        Word conjugator2; // f(p2) = c2 p2 c2^-1
        bool ok() const { return peripheral1_ok && peripheral2_ok; }
    };
    CertReport certify_mapping_class(const Automorphism& f) const;

    struct ExtensionReport {
        Mode mode = Mode::Arc;
        std::vector<bool> meridian_forward_ok;
        std::vector<bool> meridian_backward_ok;
        bool peripheral1_ok = false;
        bool peripheral2_ok = false;
        // quotient images of failing meridians (empty when accepted)
        std::vector<std::pair<std::string, Word>> witnesses;
        bool accepted = false;
    };
    // mode == Arc requires a certified mapping class; throws UncertifiedError
    // otherwise.  The criterion is necessary for extension, never claimed
    // sufficient.
    ExtensionReport check_extension(const Automorphism& f, Mode mode) const;

private:
    int genus_;
    Alphabet alphabet_;
    Word peripheral1_;
    Word peripheral2_;
    Morphism q_closed_;
    Morphism q_arc_;
};

class UncertifiedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace mcg

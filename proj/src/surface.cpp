#include "mcg/surface.hpp"

namespace mcg {

namespace {

Alphabet surface_alphabet(int g) {
    std::vector<std::string> labels;
    for (int i = 1; i <= g; ++i) {
        labels.push_back("a" + std::to_string(i));
        labels.push_back("b" + std::to_string(i));
    }
    labels.push_back("z");
    return Alphabet(labels);
}

Alphabet quotient_alphabet(int g, bool with_t) {
    std::vector<std::string> labels;
    for (int i = 1; i <= g; ++i) labels.push_back("x" + std::to_string(i));
    if (with_t) labels.push_back("t");
    return Alphabet(labels);
}

} // namespace

SurfaceModel::SurfaceModel(int genus)
    : genus_(genus),
      alphabet_((genus >= 1) ? surface_alphabet(genus)
                             : throw WordError("genus must be >= 1")),
      peripheral1_(Word::letter(2 * genus + 1)),
      peripheral2_(),
      q_closed_(Morphism::identity(alphabet_)),
      q_arc_(Morphism::identity(alphabet_)) {
    Word rel;
    for (int i = 1; i <= genus_; ++i) rel = multiply(rel, d_word(i));
    rel = multiply(rel, z_word());
    peripheral2_ = invert(rel);

    std::vector<Word> closed_imgs, arc_imgs;
    for (int i = 1; i <= genus_; ++i) {
        closed_imgs.push_back(Word::letter(i)); // a_i -> x_i
        closed_imgs.push_back(Word());          // b_i -> 1
        arc_imgs.push_back(Word::letter(i));
        arc_imgs.push_back(Word());
    }
    closed_imgs.push_back(Word());                   // z -> 1
    arc_imgs.push_back(Word::letter(genus_ + 1));    // z -> t
    q_closed_ = Morphism(alphabet_, quotient_alphabet(genus_, false), std::move(closed_imgs));
    q_arc_ = Morphism(alphabet_, quotient_alphabet(genus_, true), std::move(arc_imgs));
}

Word SurfaceModel::d_word(int i) const {
    Word ai = a_word(i), bi = b_word(i);
    return multiply(multiply(ai, bi), multiply(invert(ai), invert(bi)));
}

std::vector<Word> SurfaceModel::meridians() const {
    std::vector<Word> out;
    for (int i = 1; i <= genus_; ++i) out.push_back(b_word(i));
    return out;
}

bool SurfaceModel::in_meridian_kernel(const Word& w, Mode mode) const {
    const Morphism& q = mode == Mode::Arc ? q_arc_ : q_closed_;
    return q.apply(w).empty();
}

SurfaceModel::CertReport SurfaceModel::certify_mapping_class(const Automorphism& f) const {
    CertReport rep;
    auto c1 = solve_conjugator(peripheral1_, f.apply(peripheral1_));
    auto c2 = solve_conjugator(peripheral2_, f.apply(peripheral2_));
    rep.peripheral1_ok = c1.has_value();
    rep.peripheral2_ok = c2.has_value();
    if (c1) rep.conjugator1 = *c1;
    if (c2) rep.conjugator2 = *c2;
    return rep;
}

SurfaceModel::ExtensionReport SurfaceModel::check_extension(const Automorphism& f,
                                                            Mode mode) const {
    if (mode == Mode::Arc) {
        auto cert = certify_mapping_class(f);
        if (!cert.ok())
            throw UncertifiedError("check_extension(arc) requires a certified mapping class");
    }
    ExtensionReport rep;
    rep.mode = mode;
    rep.peripheral1_ok = true;
    rep.peripheral2_ok = true;
    bool all = true;
    for (int i = 1; i <= genus_; ++i) {
        Word bw = b_word(i);
        Word fw = f.apply(bw);
        Word bwd = f.apply_inverse(bw);
        bool okf = in_meridian_kernel(fw, mode);
        bool okb = in_meridian_kernel(bwd, mode);
        rep.meridian_forward_ok.push_back(okf);
        rep.meridian_backward_ok.push_back(okb);
        const Morphism& q = mode == Mode::Arc ? q_arc_ : q_closed_;
        if (!okf)
            rep.witnesses.emplace_back("b" + std::to_string(i) + " forward", q.apply(fw));
        if (!okb)
            rep.witnesses.emplace_back("b" + std::to_string(i) + " backward", q.apply(bwd));
        all = all && okf && okb;
    }
    rep.accepted = all;
    return rep;
}

} // namespace mcg

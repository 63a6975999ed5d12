#include "mcg/curves.hpp"

#include <algorithm>
#include <cmath>

namespace mcg {
namespace curves {

namespace {

constexpr double kR0 = 0.3;        // foot radius
constexpr double kFenceEps = 2.61803e-7;
constexpr double kPi = 3.14159265358979323846;

double rad(double deg) { return deg * kPi / 180.0; }

double xB(int i) { return -2.0 * i; }
double xBp(int i) { return -(2.0 * i - 1); }

struct Fence {
    double x;
    double anchor_y;
    Word west; // holonomy of a westward crossing
};

std::vector<Fence> fences(const SurfaceModel& m) {
    std::vector<Fence> fs;
    for (int i = 1; i <= m.genus(); ++i) {
        // ccw lasso about B_i is b_i^-1
        fs.push_back({xB(i) + kFenceEps, kR0, invert(m.b_word(i))});
        // ccw lasso about B'_i is a_i b_i a_i^-1
        fs.push_back({xBp(i) + kFenceEps, kR0,
                      conjugate(m.b_word(i), m.a_word(i))});
    }
    fs.push_back({0.0 + kFenceEps, kR0, m.z_word()});
    return fs;
}

std::vector<Pt> circle_pts(double cx, double cy, double r, double deg0, double deg1,
                           bool ccw, int steps) {
    if (ccw) {
        while (deg1 <= deg0) deg1 += 360.0;
    } else {
        while (deg1 >= deg0) deg1 -= 360.0;
    }
    std::vector<Pt> pts;
    pts.reserve(steps + 1);
    for (int k = 0; k <= steps; ++k) {
        double d = deg0 + (deg1 - deg0) * k / steps;
        pts.push_back({cx + r * std::cos(rad(d)), cy + r * std::sin(rad(d))});
    }
    return pts;
}

std::vector<Atom> arc_atoms(double cx, double cy, double r, double d0, double d1,
                            bool ccw, int steps = 40) {
    std::vector<Atom> out;
    for (const Pt& p : circle_pts(cx, cy, r, d0, d1, ccw, steps)) out.push_back(pt(p.x, p.y));
    return out;
}

struct Crossing {
    double t = 0, u = 0;
    int sign = 0;
};

std::optional<Crossing> seg_cross(const Pt& a0, const Pt& a1, const Pt& b0, const Pt& b1) {
    double dax = a1.x - a0.x, day = a1.y - a0.y;
    double dbx = b1.x - b0.x, dby = b1.y - b0.y;
    double den = dax * dby - day * dbx;
    if (std::abs(den) < 1e-12) return std::nullopt;
    double ex = b0.x - a0.x, ey = b0.y - a0.y;
    double t = (ex * dby - ey * dbx) / den;
    double u = (ex * day - ey * dax) / den;
    if (t > 1e-9 && t < 1 - 1e-9 && u > 1e-9 && u < 1 - 1e-9)
        return Crossing{t, u, den > 0 ? 1 : -1};
    return std::nullopt;
}

} // namespace

Atom pt(double x, double y) {
    Atom a;
    a.kind = Atom::Kind::Point;
    a.p = {x, y};
    return a;
}

Atom tube(int knob, bool at_meridian_foot, double theta_deg) {
    Atom a;
    a.kind = Atom::Kind::Tube;
    a.knob = knob;
    a.enter_at_meridian_foot = at_meridian_foot;
    a.theta_deg = theta_deg;
    return a;
}

Curve::Curve(const SurfaceModel& model, std::vector<Atom> atoms, bool closed)
    : model_(&model) {
    bool have_cur = false, have_start = false;
    Pt cur{}, start{};
    auto add_seg = [&](const Pt& a, const Pt& b) {
        if (a.x == b.x && a.y == b.y) return;
        Seg s;
        s.a = a;
        s.b = b;
        segs_.push_back(s);
    };
    for (const Atom& a : atoms) {
        if (a.kind == Atom::Kind::Point) {
            if (!have_start) { start = a.p; have_start = true; }
            if (have_cur) add_seg(cur, a.p);
            cur = a.p;
            have_cur = true;
        } else {
            double cx = a.enter_at_meridian_foot ? xB(a.knob) : xBp(a.knob);
            double ox = a.enter_at_meridian_foot ? xBp(a.knob) : xB(a.knob);
            Pt pin{cx + kR0 * std::cos(rad(a.theta_deg)), kR0 * std::sin(rad(a.theta_deg))};
            double tho = 180.0 - a.theta_deg;
            Pt pout{ox + kR0 * std::cos(rad(tho)), kR0 * std::sin(rad(tho))};
            if (!have_start) { start = pin; have_start = true; }
            if (have_cur) add_seg(cur, pin);
            Seg s;
            s.is_tube = true;
            s.knob = a.knob;
            s.theta_in = a.theta_deg;
            s.a = pin;
            s.b = pout;
            // record entry side in theta_in sign convention: tube letter is
            // a_knob when entered at B'_knob
            s.theta_in = a.enter_at_meridian_foot ? -a.theta_deg : a.theta_deg;
            segs_.push_back(s);
            cur = pout;
            have_cur = true;
        }
    }
    if (closed && have_cur && (cur.x != start.x || cur.y != start.y)) add_seg(cur, start);
}

const std::vector<Curve::Event>& Curve::events() const {
    if (events_ready_) return events_;
    auto fs = fences(*model_);
    for (size_t si = 0; si < segs_.size(); ++si) {
        const Seg& s = segs_[si];
        if (s.is_tube) {
            Event e;
            e.seg = static_cast<int>(si);
            e.t = 0.5;
            // entered at B'_knob (theta_in > 0): contributes a_knob
            e.w = s.theta_in > 0 ? model_->a_word(s.knob) : invert(model_->a_word(s.knob));
            events_.push_back(std::move(e));
            continue;
        }
        for (const Fence& f : fs) {
            if ((s.a.x - f.x) * (s.b.x - f.x) < 0) {
                double t = (f.x - s.a.x) / (s.b.x - s.a.x);
                double y = s.a.y + t * (s.b.y - s.a.y);
                if (y > f.anchor_y) {
                    Event e;
                    e.seg = static_cast<int>(si);
                    e.t = t;
                    e.w = (s.b.x < s.a.x) ? f.west : invert(f.west);
                    events_.push_back(std::move(e));
                }
            }
        }
    }
    std::sort(events_.begin(), events_.end(), [](const Event& a, const Event& b) {
        return a.seg != b.seg ? a.seg < b.seg : a.t < b.t;
    });
    events_ready_ = true;
    return events_;
}

Word Curve::word() const {
    Word w;
    for (const Event& e : events()) w = multiply(w, e.w);
    return w;
}

namespace {

// word of the closed curve read from a given position onward, cyclically
Word word_from(const Curve& c, int seg, double u) {
    Word after, before;
    for (const auto& e : c.events()) {
        bool is_before = (e.seg < seg) || (e.seg == seg && e.t <= u);
        if (is_before) before = multiply(before, e.w);
        else after = multiply(after, e.w);
    }
    return multiply(after, before);
}

// basis strands as open paths from the south line and back
struct BasisPath {
    Curve path;
};

std::vector<Curve> basis_paths(const SurfaceModel& m) {
    std::vector<Curve> out;
    for (int i = 1; i <= m.genus(); ++i) {
        // a_i: up, through tube i entering B'_i just west of south, down
        double th_in = 268.7;
        double xin = xBp(i) + kR0 * std::cos(rad(th_in));
        double xout = xB(i) + kR0 * std::cos(rad(180.0 - th_in));
        out.push_back(Curve(m, {pt(xin, -9.0), tube(i, false, th_in), pt(xout, -9.0)}, false));
        // b_i: clockwise lasso of radius 0.4 about B_i
        double r = 0.4, x0 = xB(i);
        std::vector<Atom> atoms;
        atoms.push_back(pt(x0 + r * std::cos(rad(268.0)), -9.0));
        atoms.push_back(pt(x0 + r * std::cos(rad(268.0)), r * std::sin(rad(268.0))));
        for (const Pt& p : circle_pts(x0, 0.0, r, 268.0, 272.0, false, 24)) atoms.push_back(pt(p.x, p.y));
        atoms.push_back(pt(x0 + r * std::cos(rad(272.0)), -9.0));
        out.push_back(Curve(m, atoms, false));
    }
    // z: counterclockwise lasso of radius 0.4 about P1
    {
        double r = 0.4;
        std::vector<Atom> atoms;
        atoms.push_back(pt(r * std::cos(rad(272.0)), -9.0));
        atoms.push_back(pt(r * std::cos(rad(272.0)), r * std::sin(rad(272.0))));
        for (const Pt& p : circle_pts(0.0, 0.0, r, 272.0, 268.0, true, 24)) atoms.push_back(pt(p.x, p.y));
        atoms.push_back(pt(r * std::cos(rad(268.0)), -9.0));
        out.push_back(Curve(m, atoms, false));
    }
    // order: a1, b1, a2, b2, ..., z  (matches the alphabet)
    std::vector<Curve> ordered;
    for (int i = 0; i < m.genus(); ++i) {
        ordered.push_back(out[2 * i]);
        ordered.push_back(out[2 * i + 1]);
    }
    ordered.push_back(out.back());
    return ordered;
}

Word image_word(const Curve& strand, const Curve& c, int hand) {
    struct Ev {
        int seg;
        double t;
        Word w;
    };
    std::vector<Ev> evs;
    for (const auto& e : strand.events()) evs.push_back({e.seg, e.t, e.w});
    const auto& ss = strand.segs();
    const auto& cs = c.segs();
    for (size_t si = 0; si < ss.size(); ++si) {
        if (ss[si].is_tube) continue;
        for (size_t cj = 0; cj < cs.size(); ++cj) {
            if (cs[cj].is_tube) continue;
            auto r = seg_cross(ss[si].a, ss[si].b, cs[cj].a, cs[cj].b);
            if (r) {
                Word cw = word_from(c, static_cast<int>(cj), r->u);
                Word ins = (r->sign * hand > 0) ? cw : invert(cw);
                evs.push_back({static_cast<int>(si), r->t, std::move(ins)});
            }
        }
    }
    std::sort(evs.begin(), evs.end(), [](const Ev& a, const Ev& b) {
        return a.seg != b.seg ? a.seg < b.seg : a.t < b.t;
    });
    Word out;
    for (auto& e : evs) out = multiply(out, e.w);
    return out;
}

Morphism twist_table(const SurfaceModel& m, const Curve& c, int hand) {
    auto paths = basis_paths(m);
    std::vector<Word> imgs;
    imgs.reserve(paths.size());
    for (const auto& p : paths) imgs.push_back(image_word(p, c, hand));
    return Morphism(m.alphabet(), m.alphabet(), std::move(imgs));
}

void check_embedded(const Curve& c) {
    const auto& ss = c.segs();
    // tube strands must not share a fiber angle with basis strands (268.7)
    for (const auto& s : ss)
        if (s.is_tube && std::abs(std::abs(s.theta_in) - 268.7) < 0.5)
            throw MorphismError("curve tube strand collides with basis strand");
    for (size_t i = 0; i < ss.size(); ++i) {
        if (ss[i].is_tube) continue;
        for (size_t j = i + 1; j < ss.size(); ++j) {
            if (ss[j].is_tube) continue;
            if (seg_cross(ss[i].a, ss[i].b, ss[j].a, ss[j].b))
                throw MorphismError("curve is not embedded (self-intersection)");
        }
    }
}

int handedness(const SurfaceModel& m) {
    // calibrated once: the right-handed twist along beta_1 sends a1 to a1 b1
    static thread_local int cached_rank = -1;
    static thread_local int cached_hand = 0;
    if (cached_rank == m.rank()) return cached_hand;
    Curve c = circle(m, xB(1), 0.0, 0.34);
    for (int h : {1, -1}) {
        Morphism t = twist_table(m, c, h);
        if (t.image(0) == multiply(m.a_word(1), m.b_word(1))) {
            cached_rank = m.rank();
            cached_hand = h;
            return h;
        }
    }
    throw MorphismError("twist handedness calibration failed");
}

} // namespace

Automorphism twist(const SurfaceModel& m, const Curve& c) {
    check_embedded(c);
    int h = handedness(m);
    return Automorphism(twist_table(m, c, h), twist_table(m, c, -h));
}

Curve circle(const SurfaceModel& m, double cx, double cy, double r) {
    std::vector<Atom> atoms;
    auto pts = circle_pts(cx, cy, r, 0.0, 360.0, true, 32);
    pts.pop_back();
    for (const Pt& p : pts) atoms.push_back(pt(p.x, p.y));
    return Curve(m, atoms, true);
}

Curve meridian_circle(const SurfaceModel& m, int i) { return circle(m, xB(i), 0.0, 0.34); }

Curve knob_boundary(const SurfaceModel& m, int i) {
    return Curve(m,
                 {pt(xB(i) - 0.55, -0.55), pt(xBp(i) + 0.55, -0.55),
                  pt(xBp(i) + 0.55, 0.55), pt(xB(i) - 0.55, 0.55)},
                 true);
}

Curve through_handle(const SurfaceModel& m, int i) {
    return Curve(m, {tube(i, false, 178.0), pt(xB(i) + 0.34, 0.0105)}, true);
}

namespace {

std::vector<Pt> offset_polyline(const std::vector<Pt>& pts, double delta) {
    struct Line {
        Pt a, b;
    };
    std::vector<Line> lines;
    for (size_t k = 0; k + 1 < pts.size(); ++k) {
        double dx = pts[k + 1].x - pts[k].x, dy = pts[k + 1].y - pts[k].y;
        double L = std::hypot(dx, dy);
        double nx = -dy / L, ny = dx / L;
        lines.push_back({{pts[k].x + nx * delta, pts[k].y + ny * delta},
                         {pts[k + 1].x + nx * delta, pts[k + 1].y + ny * delta}});
    }
    std::vector<Pt> out;
    out.push_back(lines.front().a);
    for (size_t k = 0; k + 1 < lines.size(); ++k) {
        const auto& A = lines[k];
        const auto& B = lines[k + 1];
        double dax = A.b.x - A.a.x, day = A.b.y - A.a.y;
        double dbx = B.b.x - B.a.x, dby = B.b.y - B.a.y;
        double den = dax * dby - day * dbx;
        if (std::abs(den) < 1e-12) {
            out.push_back(A.b);
        } else {
            double ex = B.a.x - A.a.x, ey = B.a.y - A.a.y;
            double t = (ex * dby - ey * dbx) / den;
            out.push_back({A.a.x + dax * t, A.a.y + day * t});
        }
    }
    out.push_back(lines.back().b);
    return out;
}

double angle_about(const Pt& p, double cx, double cy) {
    return std::atan2(p.y - cy, p.x - cx) * 180.0 / kPi;
}

// outer boundary of a band around a spoke running from a foot to a noose
Curve spoke_outer(const SurfaceModel& m, double foot_x, const std::vector<Pt>& spoke,
                  double nx, double ny, double rn, double delta = 0.03) {
    auto PL = offset_polyline(spoke, +delta);
    auto PR = offset_polyline(spoke, -delta);
    std::vector<Atom> atoms;
    for (const Pt& p : PL) atoms.push_back(pt(p.x, p.y));
    double aL = angle_about(PL.back(), nx, ny);
    double aR = angle_about(PR.back(), nx, ny);
    double sweep = std::fmod(aR - aL + 720.0, 360.0);
    bool ccw = sweep > 180.0;
    Pt s0{nx + rn * std::cos(rad(aL)), ny + rn * std::sin(rad(aL))};
    atoms.push_back(pt(s0.x, s0.y));
    for (const Pt& p : circle_pts(nx, ny, rn, aL, aR, ccw, 48))
        atoms.push_back(pt(p.x, p.y));
    atoms.push_back(pt(PR.back().x, PR.back().y));
    for (auto it = PR.rbegin() + 1; it != PR.rend(); ++it) atoms.push_back(pt(it->x, it->y));
    double bL = angle_about(PL.front(), foot_x, 0.0);
    double bR = angle_about(PR.front(), foot_x, 0.0);
    double rb = std::hypot(PL.front().x - foot_x, PL.front().y);
    double sweep2 = std::fmod(bL - bR + 720.0, 360.0);
    bool ccw2 = sweep2 > 180.0;
    auto barc = circle_pts(foot_x, 0.0, rb, bR, bL, ccw2, 72);
    for (size_t k = 1; k + 1 < barc.size(); ++k) atoms.push_back(pt(barc[k].x, barc[k].y));
    return Curve(m, atoms, true);
}

} // namespace

Curve p1_slide_outer(const SurfaceModel& m, int i, bool primed) {
    int g = m.genus();
    double x0 = primed ? xBp(i) : xB(i);
    double xw = -2.0 * g - 1.2;
    double th0 = 110.5;
    Pt p0{x0 + 0.315 * std::cos(rad(th0)), 0.315 * std::sin(rad(th0))};
    Pt p1{x0 + 0.45 * std::cos(rad(th0)), 0.45 * std::sin(rad(th0))};
    std::vector<Pt> spoke{p0, p1, {p1.x, 0.97}, {xw, 0.97}, {xw, -9.63}};
    if (i >= 2) {
        double xpre = -2.0 * (i - 1) - 0.54;
        spoke.insert(spoke.end(), {{1.10, -9.63},
                                   {1.10, 0.72},
                                   {xpre, 0.72},
                                   {xpre, -0.71},
                                   {0.80, -0.71},
                                   {0.80, -0.63}});
    } else {
        spoke.insert(spoke.end(), {{0.955, -9.63}, {0.955, -0.63}});
    }
    double r_hit = 0.63 / std::sin(rad(60.0));
    spoke.push_back({r_hit * std::cos(rad(-60.0)), -0.63});
    spoke.push_back({0.62 * std::cos(rad(-60.0)), 0.62 * std::sin(rad(-60.0))});
    return spoke_outer(m, x0, spoke, 0.0, 0.0, 0.52);
}

namespace {

constexpr double Y1 = 1.00, Y2 = 0.94, Y3 = 1.12;
constexpr double kRC = 0.33;   // base collar radius
constexpr double kRnB = 0.45;  // noose radius about a foot

Pt collar_pt(double cx, double deg) {
    return {cx + kRC * std::cos(rad(deg)), kRC * std::sin(rad(deg))};
}

ParallelPair finish_pair(const SurfaceModel& m, double x0, double tha, double thb,
                         std::vector<Atom> mid) {
    auto arc_short = arc_atoms(x0, 0.0, kRC, thb, tha, tha > thb, 8);
    auto arc_long = arc_atoms(x0, 0.0, kRC, thb, tha, tha < thb, 60);
    std::vector<Atom> in_atoms = mid;
    in_atoms.insert(in_atoms.end(), arc_short.begin() + 1, arc_short.end() - 1);
    std::vector<Atom> out_atoms = std::move(mid);
    out_atoms.insert(out_atoms.end(), arc_long.begin() + 1, arc_long.end() - 1);
    return {Curve(m, out_atoms, true), Curve(m, in_atoms, true)};
}

} // namespace

ParallelPair p2_slide(const SurfaceModel& m, int i, bool primed) {
    int g = m.genus();
    double x0 = primed ? xBp(i) : xB(i);
    double xw = -2.0 * g - 1.2;
    double tha, thb;
    std::vector<Atom> out, back_end;
    if (!primed) {
        tha = 104.0;
        thb = 117.0;
        Pt pa = collar_pt(x0, tha), pb = collar_pt(x0, thb);
        out = {pt(pa.x, pa.y), pt(pa.x, Y1)};
        back_end = {pt(pb.x, Y2), pt(pb.x, pb.y)};
        double xw2 = xw - 0.25;
        out.push_back(pt(xw2, Y1));
        std::vector<Atom> noose{pt(xw2, 2.4), pt(1.2, 2.4), pt(1.2, -9.7),
                                pt(xw - 0.55, -9.7), pt(xw - 0.55, Y2)};
        std::vector<Atom> mid = out;
        mid.insert(mid.end(), noose.begin(), noose.end());
        mid.insert(mid.end(), back_end.begin(), back_end.end());
        return finish_pair(m, x0, tha, thb, std::move(mid));
    }
    // primed: the corridor leaves to the south-west and dips under the
    // meridian foot of the knob (image of the unprimed loop under the
    // counterclockwise semitwist)
    tha = 244.0;
    thb = 231.0;
    Pt pa = collar_pt(x0, tha), pb = collar_pt(x0, thb);
    double xbase = xB(i);
    out = {pt(pa.x, pa.y), pt(pa.x, -0.76), pt(xbase - 0.68, -0.76), pt(xbase - 0.68, Y2)};
    back_end = {pt(xbase - 0.62, Y1), pt(xbase - 0.62, -0.70), pt(pb.x, -0.70),
                pt(pb.x, pb.y)};
    double xm = xw - 0.25;
    out.push_back(pt(xm, Y2));
    std::vector<Atom> noose{pt(xm, -9.7), pt(1.2, -9.7), pt(1.2, 2.4), pt(xw - 0.55, 2.4),
                            pt(xw - 0.55, Y1)};
    std::vector<Atom> mid = out;
    mid.insert(mid.end(), noose.begin(), noose.end());
    mid.insert(mid.end(), back_end.begin(), back_end.end());
    return finish_pair(m, x0, tha, thb, std::move(mid));
}

ParallelPair foot_slide(const SurfaceModel& m, int i, int j, bool primed) {
    double x0 = primed ? xBp(i) : xB(i);
    bool west = j > i;
    double tha = west ? 104.0 : 76.0;
    double thb = west ? 117.0 : 63.0;
    Pt pa = collar_pt(x0, tha), pb = collar_pt(x0, thb);
    std::vector<Atom> out{pt(pa.x, pa.y), pt(pa.x, Y1)};
    std::vector<Atom> back_end{pt(pb.x, Y2), pt(pb.x, pb.y)};
    double xbj = xB(j);
    double lip_y = kRnB * std::sin(rad(10.0));
    std::vector<Atom> back;
    if (west) {
        double xv = xbj + 0.62;
        double lipx = xbj + kRnB * std::cos(rad(10.0));
        out.insert(out.end(), {pt(xv, Y1), pt(xv, lip_y), pt(lipx, lip_y)});
        auto arc = arc_atoms(xbj, 0.0, kRnB, 10.0, -10.0, true);
        out.insert(out.end(), arc.begin(), arc.end());
        back = {pt(xv + 0.06, -lip_y), pt(xv + 0.06, Y2)};
    } else {
        double xv = xbj - 0.55;
        double lipx = xbj - kRnB * std::cos(rad(10.0));
        out.insert(out.end(), {pt(xv, Y1), pt(xv, lip_y), pt(lipx, lip_y)});
        auto arc = arc_atoms(xbj, 0.0, kRnB, 170.0, 190.0, false);
        out.insert(out.end(), arc.begin(), arc.end());
        back = {pt(xv - 0.05, -lip_y), pt(xv - 0.05, Y2)};
    }
    std::vector<Atom> mid = out;
    mid.insert(mid.end(), back.begin(), back.end());
    mid.insert(mid.end(), back_end.begin(), back_end.end());
    return finish_pair(m, x0, tha, thb, std::move(mid));
}

ParallelPair tube_slide(const SurfaceModel& m, int i, int j, bool primed) {
    double x0 = primed ? xBp(i) : xB(i);
    bool west = j > i;
    // attach so the high return strand descends east of the outgoing one
    double tha = west ? 117.0 : 63.0;
    double thb = west ? 104.0 : 76.0;
    Pt pa = collar_pt(x0, tha), pb = collar_pt(x0, thb);
    std::vector<Atom> out{pt(pa.x, pa.y), pt(pa.x, Y1)};
    std::vector<Atom> mid;
    double th_in = 96.0;
    if (west) {
        double x_ent = xBp(j) + kR0 * std::cos(rad(th_in));
        out.push_back(pt(x_ent, Y1));
        out.push_back(tube(j, false, th_in));
        double x_exit = xB(j) + kR0 * std::cos(rad(180.0 - th_in));
        mid = out;
        mid.insert(mid.end(), {pt(x_exit, Y3), pt(pb.x, Y3), pt(pb.x, pb.y)});
    } else {
        double x_ent = xB(j) + kR0 * std::cos(rad(th_in));
        out.push_back(pt(x_ent, Y1));
        out.push_back(tube(j, true, th_in));
        double x_exit = xBp(j) + kR0 * std::cos(rad(180.0 - th_in));
        mid = out;
        mid.insert(mid.end(), {pt(x_exit, Y3), pt(pb.x, Y3), pt(pb.x, pb.y)});
    }
    return finish_pair(m, x0, tha, thb, std::move(mid));
}

} // namespace curves
} // namespace mcg

#pragma once

#include "mcg/surface.hpp"

namespace mcg {

// Planar chart of the twice-punctured surface used to derive generator
// tables.  Feet of handle i sit at x = -2i (B_i, carrying the meridian) and
// x = -(2i-1) (B'_i); the puncture P1 sits at x = 0 and P2 at infinity.
// Each handle is a tube joining the boundary circles of its feet; a curve
// entering a foot circle at angle t leaves the other foot at 180 - t.
// Crossing the vertical fence above an object contributes that object's
// lasso class to a holonomy word; passing through tube i contributes a_i.
// Dehn-twist tables are computed by splicing the curve's holonomy word into
// each basis strand at its geometric crossings.
namespace curves {

struct Pt {
    double x = 0, y = 0;
};

struct Atom {
    enum class Kind { Point, Tube } kind = Kind::Point;
    Pt p{};          // Point
    int knob = 0;    // Tube
    bool enter_at_meridian_foot = false; // true: enter at B_knob, else B'_knob
    double theta_deg = 0;
};

Atom pt(double x, double y);
Atom tube(int knob, bool at_meridian_foot, double theta_deg);

class Curve {
public:
    Curve(const SurfaceModel& model, std::vector<Atom> atoms, bool closed);

    // holonomy class of the curve (closed curves only)
    Word word() const;
    const SurfaceModel& model() const { return *model_; }

    struct Seg {
        bool is_tube = false;
        Pt a{}, b{};
        int knob = 0;
        double theta_in = 0; // tube fiber angle
    };
    const std::vector<Seg>& segs() const { return segs_; }

    // events: fence crossings and tube letters in traversal order
    struct Event {
        int seg = 0;
        double t = 0;
        Word w;
    };
    const std::vector<Event>& events() const;

private:
    const SurfaceModel* model_;
    std::vector<Seg> segs_;
    mutable std::vector<Event> events_;
    mutable bool events_ready_ = false;
};

// Right-handed Dehn twist along an embedded closed curve, with its inverse
// table (the left-handed twist).  Checks that the curve is embedded.
Automorphism twist(const SurfaceModel& model, const Curve& c);

// circle of radius r about (cx, cy)
Curve circle(const SurfaceModel& model, double cx, double cy, double r);

// named test curves
Curve meridian_circle(const SurfaceModel& model, int i);      // beta_i
Curve knob_boundary(const SurfaceModel& model, int i);        // delta_i
Curve through_handle(const SurfaceModel& model, int i);       // alpha_i

// Outer parallel of the slide loop of Z_i (center of B_i; of Z'_i when
// primed) about the puncture P1.  Carries the pre-wind about P1 and knobs
// 1..i-1 that makes the family rotation-equivariant.
Curve p1_slide_outer(const SurfaceModel& model, int i, bool primed);

// Outer/inner parallels for the remaining slide families.
struct ParallelPair {
    Curve outer;
    Curve inner;
};
ParallelPair p2_slide(const SurfaceModel& model, int i, bool primed);
ParallelPair foot_slide(const SurfaceModel& model, int i, int j, bool primed);
ParallelPair tube_slide(const SurfaceModel& model, int i, int j, bool primed);

} // namespace curves

} // namespace mcg

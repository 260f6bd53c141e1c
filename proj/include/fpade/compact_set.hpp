#ifndef FPADE_COMPACT_SET_HPP
#define FPADE_COMPACT_SET_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "fpade/errors.hpp"

namespace fpade {

using Cplx = std::complex<double>;

// A compact set in the plane, represented by the discrete grids used for
// extremal-point searches.  Shapes with known transfinite diameter report it
// so experiments can compare estimates against ground truth.
class CompactSet {
  public:
    enum class Kind { Disk, Circle, Segment, Polygon, Cloud };

    static CompactSet disk(double radius);
    static CompactSet circle(double radius);
    static CompactSet segment(Cplx a, Cplx b);
    static CompactSet polygon(std::vector<Cplx> vertices);  // closed boundary
    static CompactSet cloud(std::vector<Cplx> points);

    // Parse "circle:R", "disk:R", "segment:ax,ay,bx,by", "square:S" (side S
    // centered at 0), or a JSON object string.
    static CompactSet parse(const std::string& descriptor);
    static CompactSet from_json(const std::string& json_text);

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }

    // n points on (or filling, for disks) the set.  Extremal point
    // configurations of a compact set live on its outer boundary, so disks
    // grid their circle.  Deterministic: same n always yields the same grid
    // in the same order.
    std::vector<Cplx> boundary_grid(int n) const;

    // Radius of the smallest origin-centered disk containing the set.
    double enclosing_radius() const;

    // Exact transfinite diameter, when the shape has a classical formula:
    // R for circles and disks, L/4 for a segment of length L.
    std::optional<double> known_diameter() const;

    // Exact Chebyshev constant tau_k (k-th root of the minimal sup norm of a
    // monic degree-k polynomial): R for circles/disks, (L/4) 2^{1/k} for a
    // segment of length L.
    std::optional<double> known_chebyshev(int k) const;

    // Whether circle/disk symmetry lets Fekete searches shortcut to roots
    // of unity (which are exactly optimal there).
    bool is_circular() const { return kind_ == Kind::Disk || kind_ == Kind::Circle; }
    double circle_radius() const { return radius_; }

    const std::vector<Cplx>& raw_points() const { return points_; }

  private:
    CompactSet(Kind kind, std::string name);

    Kind kind_;
    std::string name_;
    double radius_ = 0.0;            // Disk/Circle
    Cplx seg_a_, seg_b_;             // Segment
    std::vector<Cplx> points_;       // Polygon vertices / Cloud points
};

}  // namespace fpade

#endif

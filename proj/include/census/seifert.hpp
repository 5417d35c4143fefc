#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "census/gluing.hpp" // census::Error
#include "census/rational.hpp"

namespace census {

/// Seifert fibration base data: underlying compact surface plus mirror
/// circles and cone points.
struct SeifertData {
    int genus = 0;              // orientable genus, or crosscap count
    bool orientable_base = true;
    int boundary_circles = 0;   // true boundary components
    int mirror_circles = 0;
    std::vector<std::pair<i64, i64>> cones; // (alpha >= 2, beta), gcd = 1

    bool closed() const { return boundary_circles == 0; }

    void add_cone(i64 alpha, i64 beta) {
        if (alpha < 2) throw Error("SeifertData: cone order must be >= 2");
        if (std::gcd(alpha, ((beta % alpha) + alpha) % alpha) != 1 && std::gcd(alpha, std::abs(beta)) != 1)
            throw Error("SeifertData: cone invariants not coprime");
        cones.push_back({alpha, ((beta % alpha) + alpha) % alpha});
        std::sort(cones.begin(), cones.end());
    }

    /// Euler characteristic of the underlying compact surface, mirror
    /// circles counted as boundary circles.
    int underlying_chi() const {
        int b = mirror_circles + boundary_circles;
        return orientable_base ? 2 - 2 * genus - b : 2 - genus - b;
    }

    /// Printable base-orbifold form, e.g. "RP2(2,1)(2,1)" or
    /// "annulus+2mirrors".
    std::string base_form() const {
        std::string s;
        if (orientable_base) {
            if (genus == 0 && mirror_circles + boundary_circles == 0) s = "S2";
            else if (genus == 0 && mirror_circles + boundary_circles == 1) s = "disc";
            else if (genus == 0 && mirror_circles + boundary_circles == 2) s = "annulus";
            else if (genus == 1 && mirror_circles + boundary_circles == 0) s = "torus";
            else s = "or-g" + std::to_string(genus) + "-b" + std::to_string(mirror_circles + boundary_circles);
        } else {
            if (genus == 1 && mirror_circles + boundary_circles == 0) s = "RP2";
            else if (genus == 1 && mirror_circles + boundary_circles == 1) s = "Mobius";
            else if (genus == 2 && mirror_circles + boundary_circles == 0) s = "Klein";
            else s = "nonor-g" + std::to_string(genus) + "-b" + std::to_string(mirror_circles + boundary_circles);
        }
        if (mirror_circles == 1) s += "+mirror";
        else if (mirror_circles > 1) s += "+" + std::to_string(mirror_circles) + "mirrors";
        for (auto [a, b] : cones) s += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
        return s;
    }
};

/// Orbifold Euler characteristic: chi(underlying, mirrors as boundary)
/// minus sum of (1 - 1/alpha) over cone points.
inline Rational chi_orb(const SeifertData& d) {
    if (d.boundary_circles != 0)
        throw Error("chi_orb: true boundary present; closed classification requires none");
    Rational chi(d.underlying_chi());
    for (auto [a, b] : d.cones) {
        (void)b;
        chi -= Rational(a - 1, a);
    }
    return chi;
}

enum class Geometry { S3, S2xR, E3, Nil, H2xR, SL2R, Sol, NotClassifiedHere };

inline std::string geometry_name(Geometry g) {
    switch (g) {
        case Geometry::S3: return "S3";
        case Geometry::S2xR: return "S2xR";
        case Geometry::E3: return "E3";
        case Geometry::Nil: return "Nil";
        case Geometry::H2xR: return "H2xR";
        case Geometry::SL2R: return "SL2R";
        case Geometry::Sol: return "Sol";
        case Geometry::NotClassifiedHere: return "unclassified";
    }
    return "unclassified";
}

/// Geometry of a closed Seifert manifold from the sign of chi_orb and the
/// vanishing of the Euler number.
inline Geometry classify_geometry(const SeifertData& d, const Rational& euler_number) {
    if (!d.closed()) throw Error("classify_geometry: base must be closed");
    int s = chi_orb(d).sign();
    bool e0 = euler_number.is_zero();
    if (s > 0) return e0 ? Geometry::S2xR : Geometry::S3;
    if (s == 0) return e0 ? Geometry::E3 : Geometry::Nil;
    return e0 ? Geometry::H2xR : Geometry::SL2R;
}

} // namespace census

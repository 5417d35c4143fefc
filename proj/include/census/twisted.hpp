#pragma once

#include <cstdlib>

#include "census/farey.hpp"
#include "census/marked.hpp"
#include "census/seifert.hpp"

namespace census {

/// Fiber type of a slope on the boundary of the twisted I-bundle over the
/// torus, in its standard {inf,0,1} coordinates. The bundle is the product
/// of the Moebius band with a circle; twisting the band coordinate by the
/// circle coordinate is a self-homeomorphism moving the product fibration's
/// boundary fiber from 0 to any integer, and twisting the circle coordinate
/// by the band coordinate moves the mirror fibration's fiber from inf within
/// even-denominator slopes. The two families fill the odd- and
/// even-denominator slopes respectively.
inline bool twisted_fiber_is_product_type(const Slope& s) { return std::abs(s.q) % 2 == 1; }

namespace detail {
inline SeifertData klein_base() {
    SeifertData d;
    d.orientable_base = false;
    d.genus = 2;
    return d;
}
inline SeifertData moebius_mirror_base() {
    SeifertData d;
    d.orientable_base = false;
    d.genus = 1;
    d.mirror_circles = 1;
    return d;
}
inline SeifertData annulus_two_mirrors_base() {
    SeifertData d;
    d.orientable_base = true;
    d.genus = 0;
    d.mirror_circles = 2;
    return d;
}
inline SeifertData rp2_base(i64 a) {
    SeifertData d;
    d.orientable_base = false;
    d.genus = 1;
    d.add_cone(a, 1);
    d.add_cone(2, 1);
    return d;
}
inline SeifertData disc_mirror_base(i64 a) {
    SeifertData d;
    d.orientable_base = true;
    d.genus = 0;
    d.mirror_circles = 1;
    d.add_cone(a, 1);
    d.add_cone(2, 1);
    return d;
}
} // namespace detail

/// Assembling two twisted I-bundles along psi (a bijection of the {inf,0,1}
/// markings): the glued manifold fibers over the union of compatible base
/// orbifolds. Fiber matching: 0 is the product-fibration fiber, inf the
/// mirror-fibration fiber.
inline SeifertData classify_two_twisted(const Mat2& psi) {
    Slope zero(0, 1), one(1, 1), inf = Slope::infinity();
    ThetaGraph base = ThetaGraph::base();
    if (apply_gl2(psi, base) != base)
        throw Error("classify_two_twisted: psi does not permute the marking {inf,0,1}");
    Slope im0 = apply_gl2(psi, zero);
    Slope iminf = apply_gl2(psi, inf);
    if (im0 == zero) return detail::klein_base();
    if (im0 == inf || iminf == zero) return detail::moebius_mirror_base();
    if (iminf == inf) return detail::annulus_two_mirrors_base();
    // Remaining bijections send 0 to 1; slope 1 has odd denominator, so it is
    // a product-type fiber and the bases again glue to a Klein bottle.
    if (im0 == one) return detail::klein_base();
    throw Error("classify_two_twisted: psi is not a marking bijection");
}

/// Which fibration of the twisted I-bundle matches through psi in the
/// Seifert-piece assembly; the piece over the disc with cone points (a,1),
/// (2,1) is marked {inf,-1,0} with disc-fibration fiber 0 and (for a = 2
/// only) Moebius-fibration fiber -1.
enum class TwistedRoute { DiscFiber, MoebiusFiber };

/// Assembling the marked piece (D2 x S1)_{a,2,theta_-1} with the twisted
/// I-bundle along psi: the resulting Seifert fibration extends the chosen
/// fibration of the piece across the bundle. Along the disc route, the image
/// of the fiber 0 must be a fiber of the bundle: odd denominator glues disc
/// to Moebius band (base RP2), even denominator glues disc to the mirror
/// annulus (base disc + mirror). The Moebius route exists only for a = 2.
inline SeifertData classify_seifert_twisted(i64 a, const Mat2& psi,
                                            TwistedRoute route = TwistedRoute::DiscFiber) {
    if (a < 2) throw Error("classify_seifert_twisted: cone order must be >= 2");
    ThetaGraph from = theta_i(-1); // {inf, -1, 0}
    ThetaGraph to = ThetaGraph::base();
    if (apply_gl2(psi, from) != to)
        throw Error("classify_seifert_twisted: psi does not carry theta_-1 to {inf,0,1}");
    if (route == TwistedRoute::MoebiusFiber) {
        if (a != 2)
            throw Error("classify_seifert_twisted: Moebius fibration requires both cones of order 2");
        Slope im = apply_gl2(psi, Slope(-1, 1));
        if (twisted_fiber_is_product_type(im)) return detail::klein_base();
        return detail::moebius_mirror_base();
    }
    Slope im = apply_gl2(psi, Slope(0, 1));
    if (twisted_fiber_is_product_type(im)) return detail::rp2_base(a);
    return detail::disc_mirror_base(a);
}

} // namespace census

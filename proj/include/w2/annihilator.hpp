#pragma once

#include <optional>
#include <utility>

#include "w2/derivation.hpp"
#include "w2/errors.hpp"
#include "w2/ratfunc.hpp"

namespace w2 {

/**
 * The annihilator of a non-constant rational function u inside the Lie
 * algebra of plane polynomial derivations is a free rank-one module over
 * the polynomial ring.  `delta` is its generator in reduced form, `source`
 * the attached derivation it was reduced from, and `content` the factor
 * split off, so source = content * delta.
 */
struct AnnihilatorGenerator {
    Derivation delta;
    Derivation source;
    Polynomial content;
};

inline bool annihilates(const Derivation& d, const RationalFunction& u) {
    return apply(d, u).is_zero();
}

/**
 * Compute the reduced generator of the annihilator of u.  A polynomial u
 * contributes its Hamiltonian-style attached derivation; a proper quotient
 * contributes the attached derivation of its numerator-denominator pair.
 * Constants are annihilated by everything, so they are rejected.
 */
inline AnnihilatorGenerator generator(const RationalFunction& u) {
    if (u.is_constant()) throw domain_error("constant function");
    const Derivation source = u.is_polynomial() ? attached_derivation(u.num())
                                                : attached_derivation(u.num(), u.den());
    detail::check(!source.is_zero(), "attached derivation of a non-constant vanished");
    auto reduced = reduce(source);
    detail::check(annihilates(reduced.delta, u), "reduced generator fails to annihilate");
    return {std::move(reduced.delta), source, std::move(reduced.content)};
}

/**
 * Decide membership of a candidate derivation in the annihilator of u and
 * recover the cofactor: returns h with candidate = h * delta_u when the
 * candidate annihilates u, nothing otherwise.  Failure to divide after a
 * successful annihilation check would contradict freeness of the module
 * and is flagged as an internal error.
 */
inline std::optional<Polynomial> membership(const Derivation& candidate, const RationalFunction& u) {
    const AnnihilatorGenerator gen = generator(u);
    if (!annihilates(candidate, u)) return std::nullopt;
    if (candidate.is_zero()) return Polynomial::zero();
    const bool use_p = !gen.delta.P.is_zero();
    const Polynomial& lead = use_p ? gen.delta.P : gen.delta.Q;
    const Polynomial& lead_cand = use_p ? candidate.P : candidate.Q;
    const auto h = exact_divide(lead_cand, lead);
    detail::check(h.has_value(), "annihilating derivation is not a multiple of the generator");
    detail::check(*h * gen.delta == candidate,
                  "cofactor from one coordinate does not match the other");
    return *h;
}

}  // namespace w2

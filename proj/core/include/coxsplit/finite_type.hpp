#ifndef COXSPLIT_FINITE_TYPE_HPP
#define COXSPLIT_FINITE_TYPE_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "coxsplit/subset.hpp"
#include "coxsplit/system.hpp"

namespace coxsplit {

using BigInt = boost::multiprecision::cpp_int;

/// One noncommuting-diagram component with its catalog match.
/// Tags: A1, An, Bn, Dn, E6, E7, E8, F4, H3, H4, I2(m), or "infinite".
struct ComponentType {
    Subset generators;
    std::string tag;
    BigInt order;  ///< 0 when infinite
    bool finite() const { return order != 0; }
};

struct FiniteTypeVerdict {
    bool finite = false;
    std::vector<ComponentType> components;  ///< ordered by least generator
    BigInt order;                           ///< product of component orders; 0 when infinite
};

/// Decomposition ⟨A⟩ = ⟨E⟩ × ⟨T⟩: T is the union of the finite-type
/// noncommuting components of A (the unique largest finite commuting direct
/// factor), E the union of the infinite-type ones.
struct SplitEA {
    Subset e, t;
    bool operator==(const SplitEA&) const = default;
};

/// Matches every noncommuting component of A against the finite-type catalog.
FiniteTypeVerdict is_finite_type(const CoxeterSystem& sys, Subset a);

SplitEA split_ea(const CoxeterSystem& sys, Subset a);

/// { s ∈ S − A : m(s,a) = 2 for all a ∈ A }; lk2(∅) = S.
Subset lk2(const CoxeterSystem& sys, Subset a);

}  // namespace coxsplit

#endif

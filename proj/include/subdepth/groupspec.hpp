#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "subdepth/permgroup.hpp"

namespace subdepth {

/// Parsed group description.
///
///   spec  := term ("x" term)*
///   term  := S(n) | A(n) | C(n) | D(n) | Klein | G108 | diag(spec)
///          | perm(degree; gens) | "(" spec ")"
///   gens  := gen ("," gen)*,  gen := cycle+,  cycle := "(" point* ")"
///
/// D(n) is the dihedral group of order n.
struct GroupSpec {
  enum class Kind { Symmetric, Alternating, Cyclic, Dihedral, Klein, G108, Product, Diagonal, Perm };

  Kind kind = Kind::Symmetric;
  std::size_t n = 0;  // parameter, or degree for Perm
  std::vector<GroupSpec> children;
  std::vector<std::vector<std::vector<std::size_t>>> generators;  // Perm: per generator, its cycles

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Throws ParseError (message carries the 0-based position) or
/// DegreeViolation for points outside 1..degree.
GroupSpec parse_group_spec(const std::string& text);

/// Canonical text; parse_group_spec(print_group_spec(s)) == s.
std::string print_group_spec(const GroupSpec& spec);

PermutationGroup build_group(const GroupSpec& spec, std::size_t order_cap = kDefaultOrderCap);

}  // namespace subdepth

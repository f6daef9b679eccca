#pragma once

// Backend descriptors as text and the closed set of concrete backends.
//
//   FF(2,x^4+x+1)        GF(2^4) over GF(2); FF(2,4) picks the smallest irreducible
//   EXT(Q,y^2-2)         EXT(GF(3),y^2+1)    EXT(GF(2)(s),y^2+s)    EXT(Q(s),y^3-s)
//   RF(Q)                RF(GF(5))
//   QUAT
//   GA(GF(3),Z/5)        GA(Q,S3)   GA(GF(2),Z^2)   GA(GF(5),cayley:path/to/table.txt)

#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "spanbound/backend/extension.hpp"
#include "spanbound/backend/function_field.hpp"
#include "spanbound/backend/group_algebra.hpp"
#include "spanbound/backend/quaternion.hpp"

namespace spanbound {

using FiniteField = SimpleExtension<PrimeField>;
using RationalExtension = SimpleExtension<RationalField>;
using ModularFunctionExtension = SimpleExtension<RationalFunctionField<PrimeField>>;
using RationalFunctionExtension = SimpleExtension<RationalFunctionField<RationalField>>;
using ModularFunctionField = FunctionField<PrimeField>;
using RationalFunctionFieldBackend = FunctionField<RationalField>;
using ModularGroupAlgebra = GroupAlgebra<PrimeField>;
using RationalGroupAlgebra = GroupAlgebra<RationalField>;

using AnyBackend =
    std::variant<std::shared_ptr<const FiniteField>, std::shared_ptr<const RationalExtension>,
                 std::shared_ptr<const ModularFunctionExtension>, std::shared_ptr<const RationalFunctionExtension>,
                 std::shared_ptr<const ModularFunctionField>, std::shared_ptr<const RationalFunctionFieldBackend>,
                 std::shared_ptr<const Quaternions>, std::shared_ptr<const ModularGroupAlgebra>,
                 std::shared_ptr<const RationalGroupAlgebra>>;

// Parses and validates a descriptor. Relative cayley: paths resolve against base_dir.
AnyBackend create_backend(std::string_view spec, const std::string& base_dir = ".");

// Convenience constructors used by tests and tools.
std::shared_ptr<const FiniteField> make_finite_field(std::uint32_t p, std::string_view modulus);
std::shared_ptr<const FiniteField> make_finite_field(std::uint32_t p, int degree);

std::string describe(const AnyBackend& b);

// Splits "a,b,c" on commas that are not nested inside parentheses.
std::vector<std::string> split_top_level(std::string_view text, char sep = ',');

}  // namespace spanbound

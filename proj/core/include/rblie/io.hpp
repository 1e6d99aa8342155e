#pragma once

#include "rblie/rota_baxter.hpp"

#include <memory>
#include <optional>
#include <string>

namespace rblie {

// Parsed form of an algebra definition file. Rationals are serialized as
// strings ("p/q") to preserve exactness; bracket keys are "i,j" with
// 1-based i < j; the filtration is either "standard" or an explicit list of
// spanning sets.
struct AlgebraSpec {
    std::unique_ptr<LieAlgebra> algebra;
    std::optional<LinearOperator> rb;

    static AlgebraSpec parse(const std::string& json_text);
    static AlgebraSpec load(const std::string& path);
    std::string serialize() const;
};

// Parses "a,b,c,..." with exact rational entries into a coordinate vector.
Vec parse_coords(const std::string& text, int dim);
std::string format_coords(const Vec& v);

class UEAElement;
class UEAContext;

// [{"monomial": [1-based indices], "coeff": "p/q"}, ...] in canonical order.
std::string serialize_uea(const UEAElement& e);

}  // namespace rblie

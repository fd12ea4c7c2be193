#pragma once

// Minimal abstract operad description: just what the generic comonad
// construction consumes (arity-1 data, unit, restriction operators d_i and
// the extraction D_i of the i-th arity-1 component).

#include <concepts>
#include <cstddef>
#include <string>

#include "cubeops/cubes.hpp"
#include "cubeops/errors.hpp"

namespace cubeops {

template <class P>
concept AbstractOperad = requires(const P& p, const typename P::Element& e, std::size_t i) {
    typename P::Element;
    { p.unit() } -> std::same_as<typename P::Element>;
    { p.arity(e) } -> std::convertible_to<std::size_t>;
    { p.restrict(e, i) } -> std::same_as<typename P::Element>;
    { p.extract(e, i) } -> std::same_as<typename P::Element>;
    { p.name() } -> std::convertible_to<std::string>;
};

/// C_n viewed through the abstract interface.
class LittleCubesOperad {
public:
    using Element = Configuration;

    explicit LittleCubesOperad(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::string name() const { return "C_" + std::to_string(dim_); }
    Element unit() const { return Configuration::unit(dim_); }
    std::size_t arity(const Element& e) const { return e.arity(); }
    Element restrict(const Element& e, std::size_t i) const { return cubeops::restrict(e, i); }
    Element extract(const Element& e, std::size_t i) const { return Configuration::single(cubeops::extract(e, i)); }

private:
    std::size_t dim_;
};

/// The operad with a single operation in every arity. Unitary and reduced.
class OnePointOperad {
public:
    struct Element {
        std::size_t arity = 1;
        friend bool operator==(const Element&, const Element&) = default;
    };

    std::string name() const { return "OnePoint"; }
    Element unit() const { return {1}; }
    std::size_t arity(const Element& e) const { return e.arity; }
    Element restrict(const Element& e, std::size_t i) const
    {
        check(e, i);
        return {e.arity - 1};
    }
    Element extract(const Element& e, std::size_t i) const
    {
        check(e, i);
        return {1};
    }
    /// P(r) is a single point.
    Element operation(std::size_t r) const { return {r}; }

private:
    static void check(const Element& e, std::size_t i)
    {
        if (i >= e.arity) {
            throw IndexOutOfRange("OnePoint operad: index out of range");
        }
    }
};

static_assert(AbstractOperad<LittleCubesOperad>);
static_assert(AbstractOperad<OnePointOperad>);

}  // namespace cubeops

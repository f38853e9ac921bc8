#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skeinpos {

/// A diagram violates a structural invariant; indicates a builder bug rather than bad input.
class StructureError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// State expansion refused because the diagram has more crossings than allowed.
class CrossingCapExceeded : public std::runtime_error {
public:
  CrossingCapExceeded(std::size_t crossings, std::size_t cap)
      : std::runtime_error("diagram has " + std::to_string(crossings) + " crossings, above the cap of " +
                           std::to_string(cap) + " (2^" + std::to_string(crossings) +
                           " states); raise the cap explicitly to proceed"),
        crossings_(crossings),
        cap_(cap) {}

  std::size_t crossings() const { return crossings_; }
  std::size_t cap() const { return cap_; }

private:
  std::size_t crossings_;
  std::size_t cap_;
};

}  // namespace skeinpos

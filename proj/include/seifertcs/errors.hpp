#pragma once
// Exception taxonomy. The CLI maps these onto distinct exit codes, so keep
// the split: what the input *says* (syntax), what it *means* (semantics),
// what the math *requires* (hypotheses), and what the phase data *covers*.

#include <stdexcept>
#include <string>

namespace seifertcs {

// Malformed text: unexpected character, missing bracket, bad number.
// Carries the byte offset of the offending position.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Well-formed text describing invalid data: non-coprime cone pair,
// multiplicity below one, negative genus.
class semantic_error : public std::runtime_error {
 public:
  explicit semantic_error(const std::string& what) : std::runtime_error(what) {}
};

// The requested quantity is undefined when the orbifold Chern number
// vanishes (degenerate quadratic form; no isolated critical points).
class zero_chern_error : public std::domain_error {
 public:
  explicit zero_chern_error(const std::string& what) : std::domain_error(what) {}
};

// A phase assignment does not match the bundle classification: unreadable
// file, malformed entry, or class labels that fail to cover the group
// exactly once.
class phase_assignment_error : public std::runtime_error {
 public:
  explicit phase_assignment_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace seifertcs

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace ogroup {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A configured order cap (construction, lattice, certificate, hom) was hit.
class CapExceeded : public Error {
public:
  CapExceeded(std::string what_cap, std::size_t limit, std::size_t requested)
    : Error(what_cap + " cap exceeded: requested order " +
            std::to_string(requested) + ", limit " + std::to_string(limit)),
      cap_(std::move(what_cap)), limit_(limit), requested_(requested) {}

  const std::string &cap() const { return cap_; }
  std::size_t limit() const { return limit_; }
  std::size_t requested() const { return requested_; }

private:
  std::string cap_;
  std::size_t limit_;
  std::size_t requested_;
};

/// The group axiom (or operator axiom) that a candidate table violates.
enum class Axiom {
  shape,
  range,
  identity,
  inverse,
  associativity,
  operator_shape,
  operator_distributive,
  duplicate_label,
};

const char *axiom_name(Axiom axiom);

/// A table or operator list failed validation.
class InvalidGroup : public Error {
public:
  InvalidGroup(Axiom axiom, const std::string &message)
    : Error(message), axiom_(axiom) {}

  Axiom axiom() const { return axiom_; }

private:
  Axiom axiom_;
};

/// Caller broke an operation's documented precondition (non-normal subgroup,
/// mismatched operator labels, non-morphism map, ...).
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// An internal cross-check disagreed. Always an engine bug, never silent.
class InternalError : public Error {
public:
  using Error::Error;
};

} // namespace ogroup

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace stabnl {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed operator/file text. `column` is 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t column)
      : Error(what + " (column " + std::to_string(column) + ")"), column(column) {}
  std::size_t column;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

/// A hard size cap was exceeded; the message names the cap and the offending size.
class CapacityError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

class InvalidWitnessError : public Error {
 public:
  using Error::Error;
};

/// Forced measurement outcome conflicts with a deterministic result.
class ContradictionError : public Error {
 public:
  using Error::Error;
};

class ZeroProbabilityError : public Error {
 public:
  using Error::Error;
};

/// Two input generators anticommute. Indices are 1-based.
class NotAbelianError : public Error {
 public:
  NotAbelianError(std::size_t i_, std::size_t j_)
      : Error("generators " + std::to_string(i_) + " and " + std::to_string(j_) +
              " anticommute"),
        i(i_),
        j(j_) {}
  std::size_t i, j;
};

class MinusIdentityError : public Error {
 public:
  MinusIdentityError() : Error("the generators produce -identity") {}
};

/// Generator `i` (1-based) is not Hermitian.
class InvalidPhaseError : public Error {
 public:
  explicit InvalidPhaseError(std::size_t i_)
      : Error("generator " + std::to_string(i_) + " is not Hermitian"), i(i_) {}
  std::size_t i;
};

/// The subspace is not genuinely multipartite entangled.
/// Carries the violating bipartition (parties of Q, 1-based) when known, and
/// the first failing party pair when raised by the all-pairs witness search.
class NotGMEError : public Error {
 public:
  explicit NotGMEError(std::vector<std::size_t> bipartition)
      : Error(describe(bipartition, 0, 0)),
        violating_bipartition(std::move(bipartition)) {}
  NotGMEError(std::size_t a1, std::size_t a2)
      : Error(describe({}, a1, a2)), alpha1(a1), alpha2(a2) {}

  std::vector<std::size_t> violating_bipartition;
  std::size_t alpha1 = 0, alpha2 = 0;

 private:
  static std::string describe(const std::vector<std::size_t>& q, std::size_t a1,
                              std::size_t a2) {
    std::string msg = "subspace is not genuinely multipartite entangled";
    if (!q.empty()) {
      msg += "; violating bipartition Q = {";
      for (std::size_t t = 0; t < q.size(); ++t)
        msg += (t ? "," : "") + std::to_string(q[t]);
      msg += "}";
    }
    if (a1 != 0)
      msg += "; no witness for pair (" + std::to_string(a1) + "," +
             std::to_string(a2) + ")";
    return msg;
  }
};

class CertificateFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace stabnl

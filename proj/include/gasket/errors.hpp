#ifndef GASKET_ERRORS_HPP
#define GASKET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gasket {

/// Category of a library error, so callers (and the CLI) can react
/// without parsing message strings.
enum class ErrorKind {
  InvalidParameter,      // bad argument value (n < 2, p in U, ...)
  MalformedInput,        // dimension mismatch, asymmetric matrix, bad file
  SingularSystem,        // interior block not invertible
  UnsupportedStructure,  // operation needs data the structure lacks
  InvalidSubset,         // subset violates the operation's precondition
  InvalidAddress,        // cell id out of range in a composition address
  NoPath,                // endpoints disconnected in the induced subgraph
  NoChain,               // monotone-chain hypotheses not satisfied
  PreconditionViolated,  // verifier input fails its stated hypothesis
};

class GasketError : public std::runtime_error {
public:
  GasketError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

inline GasketError invalid_parameter(const std::string& msg) {
  return GasketError(ErrorKind::InvalidParameter, msg);
}
inline GasketError malformed_input(const std::string& msg) {
  return GasketError(ErrorKind::MalformedInput, msg);
}
inline GasketError singular_system(const std::string& msg) {
  return GasketError(ErrorKind::SingularSystem, msg);
}
inline GasketError unsupported_structure(const std::string& msg) {
  return GasketError(ErrorKind::UnsupportedStructure, msg);
}
inline GasketError invalid_subset(const std::string& msg) {
  return GasketError(ErrorKind::InvalidSubset, msg);
}
inline GasketError invalid_address(const std::string& msg) {
  return GasketError(ErrorKind::InvalidAddress, msg);
}
inline GasketError no_path(const std::string& msg) {
  return GasketError(ErrorKind::NoPath, msg);
}
inline GasketError no_chain(const std::string& msg) {
  return GasketError(ErrorKind::NoChain, msg);
}
inline GasketError precondition_violated(const std::string& msg) {
  return GasketError(ErrorKind::PreconditionViolated, msg);
}

}  // namespace gasket

#endif  // GASKET_ERRORS_HPP

#pragma once

#include <stdexcept>
#include <string>

namespace twc {

// Every recoverable failure in the library carries one of these tags so
// callers (and the CLI exit-code logic) can dispatch without parsing
// message strings.
enum class ErrorKind {
    SelfLoop,            // edge (u,u) rejected
    VertexOutOfRange,    // vertex id outside 0..n-1
    BagVertexOutOfRange, // decomposition bag mentions an unknown vertex
    UnknownVertex,       // query vertex appears in no bag
    NotTreeEdge,         // (s,t) is not an edge of the decomposition tree
    NotSmooth,           // operation requires a smooth decomposition
    NotASubtree,         // node set does not induce a connected subtree
    BadD,                // parameter d outside 1..|T|
    NotSorted,           // degree sequence not non-increasing
    NotGraphic,          // degree sequence has no simple realization
    BadParams,           // construction parameters violate an invariant
    EmbedFail,           // patch realization failed to embed (unreachable
                         // when the construction preconditions hold)
    HypothesisViolated,  // arithmetic hypothesis of a bound/lemma fails
    TooLarge,            // instance exceeds the exact-solver limit
    InvalidInput,        // malformed object (e.g. invalid decomposition)
    ParseError,          // unreadable file or JSON payload
    Overflow,            // exact rational arithmetic left the 64-bit range
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

} // namespace twc

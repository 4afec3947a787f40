#include "twcolor/errors.hpp"

namespace twc {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::BagVertexOutOfRange: return "BagVertexOutOfRange";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::NotTreeEdge: return "NotTreeEdge";
    case ErrorKind::NotSmooth: return "NotSmooth";
    case ErrorKind::NotASubtree: return "NotASubtree";
    case ErrorKind::BadD: return "BadD";
    case ErrorKind::NotSorted: return "NotSorted";
    case ErrorKind::NotGraphic: return "NotGraphic";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::EmbedFail: return "EmbedFail";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Overflow: return "Overflow";
    }
    return "Unknown";
}

} // namespace twc

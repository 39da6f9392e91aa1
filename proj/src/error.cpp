#include "copclean/error.hpp"

namespace copclean {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidChar: return "INVALID_CHAR";
    case ErrorCode::Truncated: return "TRUNCATED";
    case ErrorCode::TrailingData: return "TRAILING_DATA";
    case ErrorCode::UnsupportedSize: return "UNSUPPORTED_SIZE";
    case ErrorCode::VertexOutOfRange: return "VERTEX_OUT_OF_RANGE";
    case ErrorCode::BadParam: return "BAD_PARAM";
    case ErrorCode::BadK: return "BAD_K";
    case ErrorCode::IllegalMove: return "ILLEGAL_MOVE";
    case ErrorCode::TooLarge: return "TOO_LARGE";
    case ErrorCode::NoConvergence: return "NO_CONVERGENCE";
  }
  return "UNKNOWN";
}

}  // namespace copclean

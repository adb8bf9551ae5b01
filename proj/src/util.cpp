#include <cstdlib>
#include <string>
#include <thread>

#include "flamingo/error.hpp"
#include "flamingo/parallel.hpp"

namespace flamingo {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidParameters: return "invalid-parameters";
    case ErrorKind::kSizeMismatch: return "size-mismatch";
    case ErrorKind::kBlockTooSmall: return "block-too-small";
    case ErrorKind::kColumnCollision: return "column-collision";
    case ErrorKind::kZeroPolynomial: return "zero-polynomial";
    case ErrorKind::kDegreeMismatch: return "degree-mismatch";
    case ErrorKind::kConstraintViolation: return "constraint-violation";
    case ErrorKind::kNoCrossing: return "no-crossing";
    case ErrorKind::kUnsupportedShape: return "unsupported-shape";
    case ErrorKind::kUnknownFormat: return "unknown-format";
    case ErrorKind::kParse: return "parse-error";
  }
  return "unknown";
}

int default_jobs() {
  if (const char* env = std::getenv("FLAMINGO_JOBS")) {
    try {
      const int jobs = std::stoi(env);
      if (jobs > 0) return jobs;
    } catch (const std::exception&) {
      // ignore malformed values
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace flamingo

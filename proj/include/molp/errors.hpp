#ifndef MOLP_ERRORS_HPP
#define MOLP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace molp {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// projective
struct InvalidCoordinates : Error { using Error::Error; };
struct NotVisible : Error { using Error::Error; };
struct DimensionError : Error { using Error::Error; };
struct InvalidCombination : Error { using Error::Error; };
struct OppositePoints : Error { using Error::Error; };

// lp
struct NoDualAvailable : Error { using Error::Error; };

// dd
struct NotCrossing : Error { using Error::Error; };
struct IndexError : Error { using Error::Error; };
struct EmptyResult : Error { using Error::Error; };

// molp
struct InvalidInstance : Error { using Error::Error; };
struct NotInOutcomeSet : Error { using Error::Error; };
struct BadSegment : Error { using Error::Error; };
struct NotOnBoundary : Error { using Error::Error; };

// oracle / cyclicgen
struct BudgetExceeded : Error { using Error::Error; };
struct InvalidSpec : Error { using Error::Error; };

// io
struct ParseError : Error { using Error::Error; };

// a provable invariant failed; always a bug, never recoverable
struct InternalError : Error { using Error::Error; };

}  // namespace molp

#endif  // MOLP_ERRORS_HPP

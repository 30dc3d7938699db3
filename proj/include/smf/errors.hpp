#pragma once

#include <stdexcept>
#include <string>

namespace smf {

// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RamifiedPrime : Error { using Error::Error; };
struct InertIdeal : Error { using Error::Error; };
struct NegativeValuation : Error { using Error::Error; };
struct UnsupportedFieldDegree : Error { using Error::Error; };
struct NonFundamentalDiscriminant : Error { using Error::Error; };
struct RingMismatch : Error { using Error::Error; };
struct DimensionNotOne : Error { using Error::Error; };
struct DegenerateKernel : Error { using Error::Error; };
struct BoxTooSmall : Error { using Error::Error; };
struct RankDeficient : Error { using Error::Error; };
struct KernelNotOneDimensional : Error { using Error::Error; };
struct EigenRelationViolated : Error { using Error::Error; };
struct WeightMismatch : Error { using Error::Error; };
struct WeightOutOfRange : Error { using Error::Error; };
struct NotIntegral : Error { using Error::Error; };
struct TableMismatch : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

} // namespace smf

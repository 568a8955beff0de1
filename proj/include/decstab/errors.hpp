#pragma once

#include <stdexcept>
#include <string>

namespace decstab {

// Base class for all library errors.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// Inconsistent matrix or system dimensions.
class DimensionMismatch : public Error {
   public:
    using Error::Error;
};

// I - D_K * D_P is singular or too ill-conditioned for the feedback
// interconnection to be meaningful.
class IllPosedInterconnection : public Error {
   public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
   public:
    using Error::Error;
};

// An eigensolver or factorization did not converge.
class NumericalFailure : public Error {
   public:
    using Error::Error;
};

class UncontrollablePair : public Error {
   public:
    using Error::Error;
};

class UnobservablePair : public Error {
   public:
    using Error::Error;
};

// Pole placement could not be verified to the requested accuracy.
class IllConditionedPlacement : public Error {
   public:
    using Error::Error;
};

// A gain-halving loop hit its iteration cap without meeting its target.
class HalvingExhausted : public Error {
   public:
    using Error::Error;
};

// All fresh random directions failed the movement test.
class RedrawLimit : public Error {
   public:
    using Error::Error;
};

// The downward index scan found no admissible index; indicates a
// tolerance misconfiguration rather than a genuine model property.
class NoIndexFound : public Error {
   public:
    using Error::Error;
};

// The plant has a fixed mode in the unacceptable region, so no
// structured controller can stabilize it.
class UnstableFixedModes : public Error {
   public:
    using Error::Error;
};

// An outer synthesis iteration failed to reduce the unstable mode count.
class StepStalled : public Error {
   public:
    using Error::Error;
};

class PerturbationExhausted : public Error {
   public:
    using Error::Error;
};

class ParseError : public Error {
   public:
    using Error::Error;
};

class ValidationError : public Error {
   public:
    using Error::Error;
};

}  // namespace decstab

// Error types shared across the library. Every domain failure derives from
// clift::Error so the CLI can map domain errors and parse/IO errors to
// distinct exit codes.
#pragma once

#include <stdexcept>
#include <string>

namespace clift {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CLIFT_DEFINE_ERROR(Name)            \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

CLIFT_DEFINE_ERROR(ZeroPolynomial);
CLIFT_DEFINE_ERROR(DivisionByZero);
CLIFT_DEFINE_ERROR(ParseError);
CLIFT_DEFINE_ERROR(MalformedSeed);
CLIFT_DEFINE_ERROR(NotSkewSymmetrizable);
CLIFT_DEFINE_ERROR(NotMutable);
CLIFT_DEFINE_ERROR(KeyMismatch);
CLIFT_DEFINE_ERROR(InvalidConfiguration);
CLIFT_DEFINE_ERROR(VertexCollision);
CLIFT_DEFINE_ERROR(MalformedNu);
CLIFT_DEFINE_ERROR(NotFrozen);
CLIFT_DEFINE_ERROR(TieExplosion);
CLIFT_DEFINE_ERROR(NotSmoothCone);
CLIFT_DEFINE_ERROR(ProportionalRays);
CLIFT_DEFINE_ERROR(SemifrozenPresent);
CLIFT_DEFINE_ERROR(NotMaximalRank);
CLIFT_DEFINE_ERROR(UnknownFixture);

#undef CLIFT_DEFINE_ERROR

}  // namespace clift

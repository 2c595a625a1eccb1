#pragma once

#include <stdexcept>
#include <string>

namespace kidtalk {

// Base class for all toolkit errors. Subclasses carry no extra state; the
// type itself is the contract callers dispatch on.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define KIDTALK_DEFINE_ERROR(Name, Base)                      \
  class Name : public Base {                                  \
   public:                                                    \
    explicit Name(const std::string& msg) : Base(msg) {}      \
  }

// corpus
KIDTALK_DEFINE_ERROR(MalformedTranscript, Error);
KIDTALK_DEFINE_ERROR(UnknownSpeakerCode, Error);
KIDTALK_DEFINE_ERROR(UnparseableAge, Error);

// judge
KIDTALK_DEFINE_ERROR(EmptyBatch, Error);
KIDTALK_DEFINE_ERROR(FormatViolation, Error);
KIDTALK_DEFINE_ERROR(ScoreOutOfRange, FormatViolation);
KIDTALK_DEFINE_ERROR(BackendUnavailable, Error);

// baselines
KIDTALK_DEFINE_ERROR(EmptyInput, Error);
KIDTALK_DEFINE_ERROR(InsufficientTokens, Error);

// features
KIDTALK_DEFINE_ERROR(OutOfRange, Error);
KIDTALK_DEFINE_ERROR(NoUsableAnnotations, Error);

// models
KIDTALK_DEFINE_ERROR(TooFewGroups, Error);
KIDTALK_DEFINE_ERROR(DegenerateDesign, Error);
KIDTALK_DEFINE_ERROR(LengthMismatch, Error);
KIDTALK_DEFINE_ERROR(ZeroVariance, Error);
KIDTALK_DEFINE_ERROR(TooFewUnits, Error);

// mixedfx
KIDTALK_DEFINE_ERROR(EmptyDesign, Error);
KIDTALK_DEFINE_ERROR(CollinearDesign, Error);
KIDTALK_DEFINE_ERROR(SingularGLS, Error);
KIDTALK_DEFINE_ERROR(NonConvergence, Error);
KIDTALK_DEFINE_ERROR(SeparationDetected, Error);

// agreement
KIDTALK_DEFINE_ERROR(NoPairableValues, Error);
KIDTALK_DEFINE_ERROR(ScaleMismatch, Error);
KIDTALK_DEFINE_ERROR(IncompleteRatings, Error);
KIDTALK_DEFINE_ERROR(AlignmentMismatch, Error);
KIDTALK_DEFINE_ERROR(TooFewItems, Error);

// pipeline
KIDTALK_DEFINE_ERROR(MissingPrerequisite, Error);
KIDTALK_DEFINE_ERROR(ConfigInvalid, Error);

#undef KIDTALK_DEFINE_ERROR

}  // namespace kidtalk

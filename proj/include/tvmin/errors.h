#ifndef TVMIN_ERRORS_H_
#define TVMIN_ERRORS_H_

#include <stdexcept>
#include <string>

namespace tvmin {

// Base class for every precondition violation raised by the library. The
// name() is stable and is what the command-line tool reports.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(const char* name, const std::string& what)
      : std::runtime_error(what), name_(name) {}
  const char* name() const noexcept { return name_; }

 private:
  const char* name_;
};

#define TVMIN_DEFINE_ERROR(Type)                         \
  class Type : public ValidationError {                  \
   public:                                               \
    explicit Type(const std::string& what)               \
        : ValidationError(#Type, what) {}                \
  }

TVMIN_DEFINE_ERROR(InvalidNodeId);
TVMIN_DEFINE_ERROR(SelfLoop);
TVMIN_DEFINE_ERROR(DuplicateEdge);
TVMIN_DEFINE_ERROR(SignalSizeMismatch);
TVMIN_DEFINE_ERROR(UnknownEdge);
TVMIN_DEFINE_ERROR(InvalidPartition);
TVMIN_DEFINE_ERROR(InvalidCluster);
TVMIN_DEFINE_ERROR(InvalidParameter);
TVMIN_DEFINE_ERROR(TooManySeeds);
TVMIN_DEFINE_ERROR(EmptySeedSet);
TVMIN_DEFINE_ERROR(InvalidSeed);
TVMIN_DEFINE_ERROR(MissingClusterSeeds);
TVMIN_DEFINE_ERROR(DenseSizeExceeded);
TVMIN_DEFINE_ERROR(NonSymmetricMatrix);
TVMIN_DEFINE_ERROR(EnumerationTooLarge);
TVMIN_DEFINE_ERROR(MalformedInput);
TVMIN_DEFINE_ERROR(IoError);

#undef TVMIN_DEFINE_ERROR

}  // namespace tvmin

#endif  // TVMIN_ERRORS_H_

#pragma once

#include <stdexcept>
#include <string>

namespace tgrasp {

// Exit-code classes used by the CLI: usage=1, data=2, runtime=3.
enum class ErrorClass { Usage = 1, Data = 2, Runtime = 3 };

class Error : public std::runtime_error {
 public:
  Error(ErrorClass cls, std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), cls_(cls), code_(std::move(code)) {}

  ErrorClass cls() const { return cls_; }
  const std::string& code() const { return code_; }

 private:
  ErrorClass cls_;
  std::string code_;
};

#define TGRASP_DEFINE_ERROR(Name, Class)                       \
  struct Name : Error {                                        \
    explicit Name(const std::string& msg)                      \
        : Error(ErrorClass::Class, #Name, msg) {}              \
  }

// geometry
TGRASP_DEFINE_ERROR(ParseError, Data);
TGRASP_DEFINE_ERROR(EmptyMesh, Data);
TGRASP_DEFINE_ERROR(NonFinite, Data);
TGRASP_DEFINE_ERROR(BadDims, Data);
TGRASP_DEFINE_ERROR(NotWatertight, Data);

// scene / grasping
TGRASP_DEFINE_ERROR(DoesNotFit, Runtime);
TGRASP_DEFINE_ERROR(NoGraspFound, Runtime);
TGRASP_DEFINE_ERROR(NoContact, Runtime);

// dataset
TGRASP_DEFINE_ERROR(EmptyCorpus, Data);
TGRASP_DEFINE_ERROR(BudgetExhausted, Runtime);
TGRASP_DEFINE_ERROR(IoError, Data);
TGRASP_DEFINE_ERROR(BadMagic, Data);
TGRASP_DEFINE_ERROR(UnsupportedVersion, Data);
TGRASP_DEFINE_ERROR(ChecksumMismatch, Data);
TGRASP_DEFINE_ERROR(TooSmall, Data);
TGRASP_DEFINE_ERROR(EmptyDataset, Data);

// learn
TGRASP_DEFINE_ERROR(ShapeMismatch, Runtime);
TGRASP_DEFINE_ERROR(MissingModality, Runtime);
TGRASP_DEFINE_ERROR(DivergenceDetected, Runtime);

// ablation
TGRASP_DEFINE_ERROR(EmptyObjectSlice, Data);
TGRASP_DEFINE_ERROR(ObjectOverlap, Data);

// cli
TGRASP_DEFINE_ERROR(ConfigError, Usage);

#undef TGRASP_DEFINE_ERROR

}  // namespace tgrasp

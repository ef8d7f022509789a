#pragma once

#include <stdexcept>
#include <string>

namespace fracomplex {

// Base for all domain/usage errors thrown by the library. name() is the
// stable identifier the CLI prints on stderr before exiting with code 3.
class Error : public std::runtime_error {
public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

#define FRACOMPLEX_DEFINE_ERROR(E)                         \
  class E : public Error {                                 \
  public:                                                  \
    explicit E(const std::string& what) : Error(#E, what) {} \
  }

FRACOMPLEX_DEFINE_ERROR(PoleError);
FRACOMPLEX_DEFINE_ERROR(BranchError);
FRACOMPLEX_DEFINE_ERROR(DomainError);
FRACOMPLEX_DEFINE_ERROR(UnknownPreset);
FRACOMPLEX_DEFINE_ERROR(ParamDomain);
FRACOMPLEX_DEFINE_ERROR(KDomain);
FRACOMPLEX_DEFINE_ERROR(GridTooCoarse);
FRACOMPLEX_DEFINE_ERROR(OriginSingularity);
FRACOMPLEX_DEFINE_ERROR(EmptyWindow);
FRACOMPLEX_DEFINE_ERROR(SingularPoint);
FRACOMPLEX_DEFINE_ERROR(NonIntegrableKernel);
FRACOMPLEX_DEFINE_ERROR(ConfigDomain);
FRACOMPLEX_DEFINE_ERROR(EmptyInput);
FRACOMPLEX_DEFINE_ERROR(ForbiddenBoundary);
FRACOMPLEX_DEFINE_ERROR(EmptyEnsemble);
FRACOMPLEX_DEFINE_ERROR(MomentDomain);
FRACOMPLEX_DEFINE_ERROR(AlphaDomain);
FRACOMPLEX_DEFINE_ERROR(OrderDomain);
FRACOMPLEX_DEFINE_ERROR(GridDomain);
FRACOMPLEX_DEFINE_ERROR(IoError);

#undef FRACOMPLEX_DEFINE_ERROR

}  // namespace fracomplex

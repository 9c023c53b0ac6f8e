#pragma once

#include <stdexcept>
#include <string>

namespace fewbody {

// Base class for all library errors. The CLI maps ConfigInvalid to exit
// code 2 and every other subclass to exit code 3.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define FEWBODY_DEFINE_ERROR(NAME) \
  struct NAME : Error {            \
    using Error::Error;            \
  }

FEWBODY_DEFINE_ERROR(GridTooSmall);
FEWBODY_DEFINE_ERROR(DegenerateSpectrum);
FEWBODY_DEFINE_ERROR(NonconvergedEigensolver);
FEWBODY_DEFINE_ERROR(AsymmetricTrap);
FEWBODY_DEFINE_ERROR(UnsupportedKind);
FEWBODY_DEFINE_ERROR(SizeMismatch);
FEWBODY_DEFINE_ERROR(LabelNotInComposition);
FEWBODY_DEFINE_ERROR(ShapeAlphabetMismatch);
FEWBODY_DEFINE_ERROR(UnsupportedN);
FEWBODY_DEFINE_ERROR(EmptySpectrum);
FEWBODY_DEFINE_ERROR(UnknownClass);
FEWBODY_DEFINE_ERROR(UnsupportedTrap);
FEWBODY_DEFINE_ERROR(StateOutOfRange);
FEWBODY_DEFINE_ERROR(KernelUndersampled);
FEWBODY_DEFINE_ERROR(WrongN);
FEWBODY_DEFINE_ERROR(MissingElement);
FEWBODY_DEFINE_ERROR(EmptySector);
FEWBODY_DEFINE_ERROR(BlockTooLarge);
FEWBODY_DEFINE_ERROR(RepeatedLabel);
FEWBODY_DEFINE_ERROR(NegativeAmplitude);
FEWBODY_DEFINE_ERROR(DerivativeUnavailable);
FEWBODY_DEFINE_ERROR(ConfigInvalid);
FEWBODY_DEFINE_ERROR(IoError);

#undef FEWBODY_DEFINE_ERROR

}  // namespace fewbody

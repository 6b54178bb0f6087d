#ifndef HYPERLAB_ERRORS_HPP
#define HYPERLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hyperlab {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define HYPERLAB_DEFINE_ERROR(NAME)                                  \
    struct NAME : Error {                                            \
        explicit NAME(const std::string& msg = #NAME) : Error(msg) {} \
    }

HYPERLAB_DEFINE_ERROR(OverflowError);
HYPERLAB_DEFINE_ERROR(ParseError);
HYPERLAB_DEFINE_ERROR(MalformedInterval);
HYPERLAB_DEFINE_ERROR(EmptyCollection);
HYPERLAB_DEFINE_ERROR(ScalarOutOfRange);
HYPERLAB_DEFINE_ERROR(ArityMismatch);
HYPERLAB_DEFINE_ERROR(EmptyArgumentSet);
HYPERLAB_DEFINE_ERROR(EmptySubset);
HYPERLAB_DEFINE_ERROR(CarrierTooLarge);
HYPERLAB_DEFINE_ERROR(NotValidated);
HYPERLAB_DEFINE_ERROR(CarrierMismatch);
HYPERLAB_DEFINE_ERROR(UnsupportedAlpha);
HYPERLAB_DEFINE_ERROR(MalformedThresholds);
HYPERLAB_DEFINE_ERROR(MalformedCorpusSpec);
HYPERLAB_DEFINE_ERROR(InstanceTooLarge);
HYPERLAB_DEFINE_ERROR(UnknownTheorem);

#undef HYPERLAB_DEFINE_ERROR

} // namespace hyperlab

#endif

#pragma once

#include <stdexcept>
#include <string>

namespace rfbeats {

/// Base class for every error raised by the library. `kind()` is the stable,
/// machine-readable error name the CLI prints next to the message.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message);

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define RFBEATS_DECLARE_ERROR(Name)                                              \
    class Name : public Error {                                                  \
    public:                                                                      \
        explicit Name(const std::string& message) : Error(#Name, message) {}     \
    }

// numerics
RFBEATS_DECLARE_ERROR(DimensionMismatch);
RFBEATS_DECLARE_ERROR(DefectiveMatrix);
RFBEATS_DECLARE_ERROR(SingularResolvent);
RFBEATS_DECLARE_ERROR(DegenerateKernel);

// model / dynamics
RFBEATS_DECLARE_ERROR(InvalidParameters);
RFBEATS_DECLARE_ERROR(ZeroLande);
RFBEATS_DECLARE_ERROR(UnphysicalInitialState);

// correlations / spectra
RFBEATS_DECLARE_ERROR(ZeroIntensity);
RFBEATS_DECLARE_ERROR(VanishingMeanQuadrature);
RFBEATS_DECLARE_ERROR(ZeroModeProjection);

// analytics
RFBEATS_DECLARE_ERROR(DivisionByZero);
RFBEATS_DECLARE_ERROR(InvalidPopulations);

// cli
RFBEATS_DECLARE_ERROR(UnknownPreset);
RFBEATS_DECLARE_ERROR(ConfigError);

#undef RFBEATS_DECLARE_ERROR

}  // namespace rfbeats

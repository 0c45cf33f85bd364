#pragma once

#include "lwd/json_io.hpp"

#include <cstdint>
#include <string>

namespace lwd::cli {

inline constexpr const char* kConfigSchema = "lwd.config/1";
inline constexpr const char* kCertSchema = "lwd.cert/1";

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 2;
inline constexpr int kConfigError = 3;
inline constexpr int kVerificationFailure = 4;

int run_cli(int argc, char** argv);

bool is_search_command(const std::string& command);
bool is_certified_command(const std::string& command);

// Runs a certified command on a validated config and returns the sealed certificate.
json run_command(const std::string& command, json config, std::uint64_t seed);

// Throws Error(verification_failure) unless the certificate is intact and every witness
// field matches a direct recomputation. An empty `command` accepts any certified command.
void check_certificate(const json& cert, const std::string& command = "");

std::string certificate_digest(const json& cert);

// depth,words,orbit,return rows of a recurrence-type certificate.
std::string residual_csv(const json& cert);

}  // namespace lwd::cli

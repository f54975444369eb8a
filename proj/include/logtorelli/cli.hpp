#pragma once

#include "logtorelli/io.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace logtorelli {

// Options shared by all subcommands. The tolerance override touches only
// the numeric layer; every decision stays exact. The seed drives the
// generic-point injectivity witness of reported resolutions.
struct CliOptions {
    std::optional<double> tolerance;
    std::uint64_t seed = 12345;
};

Json cmd_analyze(const std::string& file, const CliOptions& opt);
Json cmd_torelli(const std::string& file_a, const std::string& file_b, const CliOptions& opt);
Json cmd_unstable(const std::string& file, const std::optional<std::string>& candidates_file,
                  bool scan_self, const CliOptions& opt);
Json cmd_pencil(const std::string& file, const CliOptions& opt);
Json cmd_jumping(const std::string& file, const std::optional<std::string>& candidates_file,
                 const CliOptions& opt);
Json cmd_cubic_lift(const std::string& file, const CliOptions& opt);

}  // namespace logtorelli

#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "trigvar/errors.hpp"
#include "trigvar/geometry.hpp"
#include "trigvar/implicit.hpp"

namespace trigvar::cli {

enum class Format { Text, Json, Csv };

struct JobConfig {
    std::string subcommand;  // pure, to-rational, to-trig, implicitize, verify, epicycloid,
                             // hypocycloid, sample, intersect
    std::string input;       // parametrization file path, or the text itself when inline_input
    bool inline_input = false;
    std::optional<Signature> signature;  // to-trig target
    int option = 2;                      // implicitize: 1 rational, 2 trigonometric
    ElimOrder order = ElimOrder::BlockGrevlex;
    std::size_t budget = 0;  // 0: default_pair_budget()
    Format format = Format::Text;
    std::vector<ParamRange> ranges;  // sample, one per parameter
    std::string polys;               // verify candidates / sample check / intersect surface (file)
    std::string implicit;            // intersect: implicit equation file instead of a parametrization
    bool trig = false;               // intersect: trig-side condition instead of the rational one
    bool rational = false;           // sample: evaluate the rational form instead of the input
    Rational R, r;                   // cycloid radii
    Rational root_width = Rational(1, 1ul << 40);
};

// Exit status per error kind: 10.. for input errors, 20 for an exhausted budget.
int exit_code(ErrorKind kind);

// Runs one job; results on `out`, diagnostics on `err`. Returns the process exit status:
// 0 success, 1 negative verification, otherwise exit_code of the error raised.
int run(const JobConfig& config, std::ostream& out, std::ostream& err);

// Parses the command line (exit 2 on usage errors) and runs the job.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace trigvar::cli

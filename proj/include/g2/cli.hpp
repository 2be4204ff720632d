#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "g2/genus_two.hpp"

namespace g2 {

enum class OutputFormat { Table, Json, Csv };

/// Renders reports for one ambient space. `single` selects a bare JSON object
/// instead of an array.
void render(const std::vector<Genus2Report>& reports, int ambient, OutputFormat format, bool show_intermediates,
            bool single, std::ostream& out);

/// Entry point of the g2enum tool; `args` excludes the program name.
/// Exit codes: 0 success, 2 invalid input, 3 failed internal cross-check.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace g2

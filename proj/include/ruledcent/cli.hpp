#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ruledcent/moves.hpp"

namespace ruledcent::cli {

enum Exit : int { Ok = 0, VerifyFailed = 1, InvalidInput = 2, UnresolvedStrict = 3 };

struct Context {
    bool color = false;
    // replaces the move generators used by `verify` (mutation testing)
    std::optional<MoveGenerators> verify_generators;
};

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Context& ctx = {});

} // namespace ruledcent::cli

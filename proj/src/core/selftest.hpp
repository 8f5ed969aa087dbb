#pragma once

#include <functional>
#include <string>

namespace g31 {

// Acceptance suite: runs every criterion, streaming one line per criterion
// through `out`. Returns the number of failed criteria.
int run_acceptance(const std::function<void(const std::string&)>& out,
                   int only_criterion = 0);

}  // namespace g31

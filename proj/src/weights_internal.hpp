#pragma once

#include "mbc/weights.hpp"

namespace mbc::detail {

/// Generation with every segment placement kept; used to show the rank gate loses nothing.
LambdaSet generate_lambda_unfiltered(int m, unsigned jobs);

}  // namespace mbc::detail

#pragma once

#include <string_view>
#include <utility>
#include <vector>

namespace symcurve::detail {

/// (id, curve file text) for every file under data/fixtures/v1, sorted by id.
const std::vector<std::pair<std::string_view, std::string_view>>& fixture_sources();

}  // namespace symcurve::detail

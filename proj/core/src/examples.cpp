#include <algorithm>

#include "weave/document.hpp"

namespace weave {

namespace detail {
extern const std::pair<std::string_view, std::string_view> kExampleData[];
extern const std::size_t kExampleCount;
}  // namespace detail

const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (std::size_t i = 0; i < detail::kExampleCount; ++i) v.emplace_back(detail::kExampleData[i].first);
    return v;
  }();
  return names;
}

std::optional<std::string_view> example_text(std::string_view name) {
  for (std::size_t i = 0; i < detail::kExampleCount; ++i)
    if (detail::kExampleData[i].first == name) return detail::kExampleData[i].second;
  return std::nullopt;
}

}  // namespace weave

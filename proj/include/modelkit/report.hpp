#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace modelkit {

/*
 * Outcome of one verification run. `counts` is ordered: it is rendered in
 * this order both in text ("bijection_ok: ..., k1: v1, ...") and in JSON.
 * `base` names how the base structure was specified, when one is involved.
 */
struct Report {
  std::string check;
  std::string lattice;
  std::vector<std::pair<std::string, long long>> counts;
  bool ok = true;
  std::vector<std::string> witnesses;
  std::optional<std::string> base;

  void count(std::string key, long long value) {
    counts.emplace_back(std::move(key), value);
  }
  void fail(std::string witness) {
    ok = false;
    witnesses.push_back(std::move(witness));
  }
  /* The one-line text form, e.g. "bijection_ok: true, localisations: 2". */
  std::string summary_line() const;
};

}  // namespace modelkit

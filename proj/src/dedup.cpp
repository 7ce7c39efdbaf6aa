#include "implicitus/dedup.hpp"

#include <array>
#include <charconv>
#include <chrono>
#include <map>
#include <optional>

#include "implicitus/errors.hpp"

namespace implicitus {

std::string_view to_string(RetentionRule r) {
  switch (r) {
    case RetentionRule::R1Commits: return "R1_COMMITS";
    case RetentionRule::R2Activity: return "R2_ACTIVITY";
    case RetentionRule::R3Dup75: return "R3_DUP75";
    case RetentionRule::R4Dup80: return "R4_DUP80";
  }
  return "?";
}

namespace {

std::chrono::sys_days parse_date(const std::string& s) {
  using namespace std::chrono;
  auto bad = [&] { return InputError("invalid date '" + s + "', expected YYYY-MM-DD"); };
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') throw bad();
  int y = 0;
  unsigned m = 0, d = 0;
  auto num = [&](size_t pos, size_t len, auto& out) {
    auto [p, ec] = std::from_chars(s.data() + pos, s.data() + pos + len, out);
    if (ec != std::errc() || p != s.data() + pos + len) throw bad();
  };
  num(0, 4, y);
  num(5, 2, m);
  num(8, 2, d);
  year_month_day ymd{year{y}, month{m}, day{d}};
  if (!ymd.ok()) throw bad();
  return sys_days{ymd};
}

}  // namespace

long days_between(const std::string& first, const std::string& last) {
  return (parse_date(last) - parse_date(first)).count();
}

RetentionVerdict retain_project(const ProjectMeta& p) {
  long active = days_between(p.firstCommit, p.lastCommit);
  if (active < 0) throw InputError("project " + p.id + ": lastCommit precedes firstCommit");
  if (!(p.dupRatio >= 0.0 && p.dupRatio <= 1.0))
    throw InputError("project " + p.id + ": dupRatio outside [0,1]");

  RetentionVerdict v;
  if (!(p.commits > 1)) v.failedRules.insert(RetentionRule::R1Commits);
  if (!(active >= kMinActiveDays)) v.failedRules.insert(RetentionRule::R2Activity);
  if (!(p.inIndex || p.dupRatio < 0.75 || p.stars > 5)) v.failedRules.insert(RetentionRule::R3Dup75);
  if (!(p.inIndex || p.dupRatio < 0.80 || p.stars > 500)) v.failedRules.insert(RetentionRule::R4Dup80);
  v.retained = v.failedRules.empty();
  return v;
}

namespace {

std::optional<std::array<long, 3>> parse_version(std::string_view v) {
  std::array<long, 3> out{0, 0, 0};
  size_t part = 0;
  const char* p = v.data();
  const char* end = v.data() + v.size();
  if (p == end) return std::nullopt;
  while (p < end && part < 3) {
    auto [next, ec] = std::from_chars(p, end, out[part]);
    if (ec != std::errc()) return std::nullopt;
    ++part;
    p = next;
    if (p < end && *p == '.') {
      ++p;
    } else {
      break;  // suffixes like "-RC1" are ignored
    }
  }
  return out;
}

int platform_rank(Platform p) {
  switch (p) {
    case Platform::JVM: return 0;
    case Platform::JS: return 1;
    case Platform::Native: return 2;
  }
  return 3;
}

}  // namespace

int compare_scala_versions(std::string_view a, std::string_view b) {
  auto va = parse_version(a);
  auto vb = parse_version(b);
  if (!va || !vb) return va ? 1 : (vb ? -1 : 0);
  return *va < *vb ? -1 : (*vb < *va ? 1 : 0);
}

std::set<ModuleId> canonical_modules(std::span<const ModuleMeta> modules) {
  std::set<ModuleId> out;
  std::map<std::pair<std::string, std::string>, const ModuleMeta*> best;
  auto better = [](const ModuleMeta& a, const ModuleMeta& b) {
    if (platform_rank(a.platform) != platform_rank(b.platform))
      return platform_rank(a.platform) < platform_rank(b.platform);
    if (int c = compare_scala_versions(a.scalaVersion, b.scalaVersion); c != 0) return c > 0;
    return a.id < b.id;
  };
  for (const auto& m : modules) {
    if (m.group.empty() && m.artifact.empty()) {
      out.insert(m.id);
      continue;
    }
    auto& slot = best[{m.group, m.artifact}];
    if (!slot || better(m, *slot)) slot = &m;
  }
  for (const auto& [_, m] : best) out.insert(m->id);
  return out;
}

}  // namespace implicitus

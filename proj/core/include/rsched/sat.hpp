#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rsched {

struct Literal {
  int var = 1;  // 1-based
  bool positive = true;

  static Literal from_int(int signed_var);
  int to_int() const { return positive ? var : -var; }
  bool value(const std::vector<bool>& assignment) const { return assignment.at(var - 1) == positive; }
  Literal negated() const { return {var, !positive}; }

  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

enum class ClauseKind { OneInThree, TwoInThree };

struct StarClause {
  std::array<Literal, 3> lits;
  ClauseKind kind = ClauseKind::OneInThree;

  int true_count(const std::vector<bool>& assignment) const;
  bool satisfied(const std::vector<bool>& assignment) const;

  friend bool operator==(const StarClause&, const StarClause&) = default;
};

/// 3-SAT* formula: C_1..C_m are 1-in-3 clauses, C_{m+1}..C_{2m} are 2-in-3.
struct StarFormula {
  int n = 0;
  std::vector<StarClause> clauses;

  std::size_t m() const { return clauses.size() / 2; }

  friend bool operator==(const StarFormula&, const StarFormula&) = default;
};

/// The four structural conditions, each checked on its own.
struct StarCheck {
  bool literals_twice = false;
  bool kinds_balanced = false;
  bool kinds_ordered = false;
  bool counts_match = false;  // 3m = 2n

  bool ok() const { return literals_twice && kinds_balanced && kinds_ordered && counts_match; }
};

StarCheck check_star(const StarFormula& f);
/// Throws ValidationError naming the first failed condition.
void validate(const StarFormula& f);

/// Plain 1-in-3 formula (every clause has exactly one true literal).
struct OneInThreeFormula {
  int n = 0;
  std::vector<std::array<Literal, 3>> clauses;

  friend bool operator==(const OneInThreeFormula&, const OneInThreeFormula&) = default;
};

/// Disjunctive clauses of one to three literals.
struct CNFFormula {
  int n = 0;
  std::vector<std::vector<Literal>> clauses;

  friend bool operator==(const CNFFormula&, const CNFFormula&) = default;
};

/// Occurrence bijection (j,t) <-> (i,s). t = 1,2 are the positive
/// occurrences of x_j, t = 3,4 the negative ones, each pair in textual order.
class Kappa {
 public:
  using Slot = std::pair<int, int>;

  Kappa() = default;
  Kappa(int n, int clause_count, std::vector<Slot> forward);

  int n() const { return n_; }
  Slot at(int j, int t) const { return forward_.at(static_cast<std::size_t>(4 * (j - 1) + (t - 1))); }
  Slot inverse(int i, int s) const { return inverse_.at(static_cast<std::size_t>(3 * (i - 1) + (s - 1))); }

  /// All (j,t) sorted by increasing κ(j,t).
  std::vector<Slot> increasing_order() const;

 private:
  int n_ = 0;
  std::vector<Slot> forward_;
  std::vector<Slot> inverse_;
};

Kappa kappa_of(const StarFormula& f);

inline constexpr int kDefaultSatCap = 24;

/// Enumerates assignments lexicographically (x_1 most significant, false
/// before true) and returns the first model. Throws CapExceeded when
/// n > cap.
std::optional<std::vector<bool>> brute_force_sat(const StarFormula& f, int cap = kDefaultSatCap);
std::optional<std::vector<bool>> brute_force_sat(const OneInThreeFormula& f, int cap = kDefaultSatCap);
std::optional<std::vector<bool>> brute_force_sat(const CNFFormula& f, int cap = kDefaultSatCap);

bool satisfies(const StarFormula& f, const std::vector<bool>& assignment);
bool satisfies(const OneInThreeFormula& f, const std::vector<bool>& assignment);
bool satisfies(const CNFFormula& f, const std::vector<bool>& assignment);

struct StarConversion {
  StarFormula formula;
  /// copies[i-1] lists the star variables x_{i,1..d_i} replacing x_i.
  std::vector<std::vector<int>> copies;

  /// Reads x_i off its first copy; variables without occurrences map to false.
  std::vector<bool> project(const std::vector<bool>& star_assignment) const;
  std::vector<bool> lift(const std::vector<bool>& assignment) const;
};

StarConversion one_in_three_to_star(const OneInThreeFormula& f);

struct ModifiedConversion {
  CNFFormula formula;
  std::vector<std::vector<int>> copies;

  std::vector<bool> project(const std::vector<bool>& modified_assignment) const;
};

ModifiedConversion to_modified_3sat(const CNFFormula& f);

/// Every variable occurs exactly three times, every literal at most twice,
/// every clause has one to three literals.
bool is_modified(const CNFFormula& f);

/// The four-clause formula over x_1..x_3 used throughout the fixtures.
StarFormula appendix_formula();

// Text formats:
//   STAR <n> <m>      then 2m lines "1in3 <lit> <lit> <lit>" / "2in3 ..."
//   1IN3 <n> <k>      then k lines  "1in3 <lit> <lit> <lit>"
//   CNF <n> <k>       then k lines  "or <lit> [<lit> [<lit>]]"
// Literals are signed variable indices.
StarFormula parse_star(std::string_view text);
OneInThreeFormula parse_one_in_three(std::string_view text);
CNFFormula parse_cnf(std::string_view text);
std::string emit(const StarFormula& f);
std::string emit(const OneInThreeFormula& f);
std::string emit(const CNFFormula& f);

}  // namespace rsched

#include "sympres/srg/table_rows.hpp"

#include <charconv>
#include <numeric>

#include "sympres/error.hpp"
#include "sympres/matgrp/matrix_group.hpp"

namespace sympres {

namespace {

using K = KleinianSpec;

long long g(long long a, long long b) { return std::gcd(a, b); }

bool r_condition(int l, int r)
{
  // l = gcd(l, (r+1)/2) gcd(l, (r-1)/2) with r odd
  return r % 2 == 1 && l == g(l, (r + 1) / 2) * g(l, (r - 1) / 2);
}

Quaternion i_minus_j() { return Quaternion::i() - Quaternion::j(); }

} // namespace

const std::string &row_letters()
{
  static const std::string s = "ABCDEFGHIJKLMNOPQRSTUV";
  return s;
}

std::string row_parameter_names(char letter)
{
  switch (letter) {
  case 'A': case 'D': case 'E': return "m";
  case 'B': case 'C': return "mlr";
  case 'F': case 'G': return "mr";
  default: return "";
  }
}

std::string row_constraints(char letter)
{
  switch (letter) {
  case 'A': case 'D': case 'E': return "m >= 1";
  case 'B': case 'C': return "m >= 1, l >= 1, 0 <= r <= l, r odd, l = gcd(l,(r+1)/2) gcd(l,(r-1)/2)";
  case 'F': return "m >= 1, 0 <= r <= m, 2m+1 = gcd(2m+1,r+1) gcd(2m+1,r-1)";
  case 'G': return "m >= 1, 0 <= r <= m, r odd, m = gcd(m,(r+1)/2) gcd(m,(r-1)/2)";
  default: return "none";
  }
}

bool row_params_valid(char letter, const RowParams &p)
{
  switch (letter) {
  case 'A': case 'D': case 'E': return p.m >= 1;
  case 'B': case 'C': return p.m >= 1 && p.l >= 1 && p.r >= 0 && p.r <= p.l && r_condition(p.l, p.r);
  case 'F': {
    long long q = 2LL * p.m + 1;
    return p.m >= 1 && p.r >= 0 && p.r <= p.m && q == g(q, p.r + 1) * g(q, std::abs(p.r - 1));
  }
  case 'G': return p.m >= 1 && p.r >= 0 && p.r <= p.m && r_condition(p.m, p.r);
  default: return true;
  }
}

std::string TableRow::label() const
{
  std::string names = row_parameter_names(letter);
  std::string s(1, letter);
  if (names.empty())
    return s;
  s += '(';
  for (std::size_t i = 0; i < names.size(); ++i) {
    int v = names[i] == 'm' ? params.m : names[i] == 'l' ? params.l : params.r;
    if (i)
      s += ',';
    s += names[i];
    s += '=' + std::to_string(v);
  }
  return s + ')';
}

bool TableRow::large() const
{
  return 2LL * k.order() * h.order() > default_order_bound();
}

TableRow make_row(char letter, const RowParams &p)
{
  if (row_letters().find(letter) == std::string::npos)
    throw Error(ErrorCode::ParseError, std::string("unknown row '") + letter + "'");
  std::string names = row_parameter_names(letter);
  auto has = [&](char c) { return names.find(c) != std::string::npos; };
  if (has('m') != (p.m >= 0) || has('l') != (p.l >= 0) || has('r') != (p.r >= 0))
    throw Error(ErrorCode::InvalidRowParameters,
                std::string("row ") + letter + " takes parameters {" + names + "}");
  if (!row_params_valid(letter, p))
    throw Error(ErrorCode::ParameterConstraintViolated, std::string("row ") + letter + ": " + row_constraints(letter));

  TableRow t;
  t.letter = letter;
  t.params = p;
  const long long m = p.m, l = p.l, r = p.r;
  switch (letter) {
  case 'A':
    t = {letter, p, K::binary_dihedral(p.m), K::cyclic(2 * p.m), InvolutionSpec::trivial(), "C2", 16 * m * m, 4 * m};
    break;
  case 'B':
    t = {letter, p, K::binary_dihedral(2 * p.m * p.l), K::cyclic(2 * p.m), InvolutionSpec::alpha_r(p.r),
         "Dih" + std::to_string(2 * l), 32 * m * m * l, 2 * m * (g(2 * l, r - 1) + g(2 * l, r + 1))};
    break;
  case 'C':
    t = {letter, p, K::binary_dihedral((2 * p.m + 1) * p.l), K::cyclic(2 * p.m + 1), InvolutionSpec::beta_r(p.r),
         "D" + std::to_string(l), 8 * (2 * m + 1) * (2 * m + 1) * l, (2 * m + 1) * (g(2 * l, r - 1) + g(2 * l, r + 1))};
    break;
  case 'D':
    t = {letter, p, K::binary_dihedral(2 * p.m), K::binary_dihedral(p.m), InvolutionSpec::trivial(), "C2", 64 * m * m,
         8 * m};
    break;
  case 'E':
    t = {letter, p, K::binary_dihedral(p.m), K::binary_dihedral(p.m), InvolutionSpec::trivial(), "1", 32 * m * m, 4 * m};
    break;
  case 'F':
    t = {letter, p, K::binary_dihedral(2 * p.m + 1), K::cyclic(2), InvolutionSpec::alpha_r(p.r),
         "Dih" + std::to_string(2 * m + 1), 16 * (2 * m + 1), 2 * (g(2 * m + 1, r + 1) + g(2 * m + 1, std::abs(r - 1)))};
    break;
  case 'G':
    t = {letter, p, K::binary_dihedral(p.m), K::cyclic(1), InvolutionSpec::beta_r(p.r), "D" + std::to_string(m), 8 * m,
         g(2 * m, r + 1) + g(2 * m, r - 1)};
    break;
  case 'H': t = {letter, p, K::T(), K::T(), InvolutionSpec::trivial(), "1", 1152, 24}; break;
  case 'I': t = {letter, p, K::T(), K::binary_dihedral(2), InvolutionSpec::inversion(), "C3", 384, 24}; break;
  case 'J': t = {letter, p, K::T(), K::cyclic(2), InvolutionSpec::conjugation(i_minus_j()), "Alt4", 96, 12}; break;
  case 'K': t = {letter, p, K::T(), K::cyclic(1), InvolutionSpec::conjugation(i_minus_j()), "T", 48, 12}; break;
  case 'L': t = {letter, p, K::O(), K::O(), InvolutionSpec::trivial(), "1", 4608, 48}; break;
  case 'M': t = {letter, p, K::O(), K::T(), InvolutionSpec::trivial(), "C2", 2304, 48}; break;
  case 'N': t = {letter, p, K::O(), K::binary_dihedral(2), InvolutionSpec::trivial(), "Dih3", 768, 32}; break;
  case 'O': t = {letter, p, K::O(), K::cyclic(2), InvolutionSpec::trivial(), "Sym4", 192, 14}; break;
  case 'P': t = {letter, p, K::O(), K::cyclic(1), InvolutionSpec::conjugation(Quaternion::k()), "O", 96, 18}; break;
  case 'Q':
    t = {letter, p, K::O(), K::cyclic(1), InvolutionSpec::aut_search(AutSearchRule::CentralKernel), "O", 96, 14};
    break;
  case 'R': t = {letter, p, K::I(), K::I(), InvolutionSpec::trivial(), "1", 14400, 120}; break;
  case 'S': t = {letter, p, K::I(), K::cyclic(2), InvolutionSpec::trivial(), "Alt5", 480, 32}; break;
  case 'T':
    t = {letter, p, K::I(), K::cyclic(2), InvolutionSpec::aut_search(AutSearchRule::OuterOnCentralQuotient), "Alt5",
         480, 20};
    break;
  case 'U': t = {letter, p, K::I(), K::cyclic(1), InvolutionSpec::conjugation(Quaternion::j()), "I", 240, 30}; break;
  case 'V':
    t = {letter, p, K::I(), K::cyclic(1), InvolutionSpec::aut_search(AutSearchRule::OuterOnCentralQuotient), "I", 240,
         20};
    break;
  }
  return t;
}

TableRow parse_row_spec(std::string_view text)
{
  auto bad = [&] { return Error(ErrorCode::ParseError, "malformed row spec '" + std::string(text) + "'"); };
  if (text.empty())
    throw bad();
  char letter = text[0];
  if (row_letters().find(letter) == std::string::npos)
    throw Error(ErrorCode::ParseError, "unknown row '" + std::string(text) + "'");
  RowParams p;
  std::string_view rest = text.substr(1);
  if (!rest.empty()) {
    if (rest.front() != '(' || rest.back() != ')')
      throw bad();
    rest = rest.substr(1, rest.size() - 2);
    while (!rest.empty()) {
      auto comma = rest.find(',');
      std::string_view item = rest.substr(0, comma);
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
      auto eq = item.find('=');
      if (eq != 1)
        throw bad();
      int v = 0;
      auto num = item.substr(2);
      auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), v);
      if (ec != std::errc() || ptr != num.data() + num.size())
        throw bad();
      int *slot = item[0] == 'm' ? &p.m : item[0] == 'l' ? &p.l : item[0] == 'r' ? &p.r : nullptr;
      if (!slot)
        throw Error(ErrorCode::InvalidRowParameters, "unknown parameter '" + std::string(item) + "'");
      if (*slot != -1)
        throw Error(ErrorCode::InvalidRowParameters, "repeated parameter '" + std::string(item) + "'");
      if (v < 0)
        throw Error(ErrorCode::ParameterConstraintViolated, "negative parameter '" + std::string(item) + "'");
      *slot = v;
    }
  }
  return make_row(letter, p);
}

std::vector<TableRow> default_rows(int max_m, int max_l, bool include_large)
{
  std::vector<TableRow> out;
  auto push = [&](char c, RowParams p) {
    if (!row_params_valid(c, p))
      return;
    TableRow t = make_row(c, p);
    if (include_large || !t.large())
      out.push_back(std::move(t));
  };
  for (char c : row_letters()) {
    std::string names = row_parameter_names(c);
    if (names.empty()) {
      push(c, {});
    } else if (names == "m") {
      for (int m = 1; m <= max_m; ++m)
        push(c, {m, -1, -1});
    } else if (names == "mr") {
      for (int m = 1; m <= max_m; ++m)
        for (int r = 0; r <= m; ++r)
          push(c, {m, -1, r});
      // smallest instances whose only valid r are not all 1
      if (c == 'F')
        push(c, {7, -1, 4});
      if (c == 'G')
        push(c, {6, -1, 5});
    } else {
      for (int m = 1; m <= max_m; ++m)
        for (int l = 1; l <= max_l; ++l)
          for (int r = 0; r <= l; ++r)
            push(c, {m, l, r});
      push(c, {1, 6, 5});
    }
  }
  return out;
}

} // namespace sympres

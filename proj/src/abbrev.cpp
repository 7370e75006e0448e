/*******************************************************************************
 * Copyright (c) 2026 The qcsym Authors.                                       *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#include "qcsym/abbrev.hpp"

#include "qcsym/errors.hpp"

#include <cctype>
#include <charconv>

namespace qcsym {

namespace {

std::string strip_space(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s.push_back(c);
  return s;
}

Elem digit_value(char c, int p, std::size_t pos) {
  if (!std::isdigit(static_cast<unsigned char>(c)))
    throw ParseError("expected a digit at position " + std::to_string(pos) + ", got '" +
                     std::string(1, c) + "'");
  const int v = c - '0';
  if (v >= p)
    throw ParseError("digit " + std::to_string(v) + " at position " + std::to_string(pos) +
                     " is not below " + std::to_string(p));
  return static_cast<Elem>(v);
}

std::size_t read_count(const std::string &s, std::size_t &i) {
  const std::size_t start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
    ++i;
  if (i == start)
    throw ParseError("missing run length at position " + std::to_string(start));
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data() + start, s.data() + i, v);
  if (ec != std::errc() || v > (std::size_t{1} << 24))
    throw ParseError("run length out of range at position " + std::to_string(start));
  if (v == 0)
    throw ParseError("zero run length at position " + std::to_string(start));
  return v;
}

} // namespace

std::vector<Elem> parse_abbrev(std::string_view text, int p) {
  const std::string s = strip_space(text);
  if (s.empty())
    throw ParseError("empty polynomial");
  std::vector<Elem> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const Elem d = digit_value(s[i], p, i);
    ++i;
    std::size_t run = 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      if (i < s.size() && s[i] == '{') {
        ++i;
        run = read_count(s, i);
        if (i >= s.size() || s[i] != '}')
          throw ParseError("unclosed brace at position " + std::to_string(i));
        ++i;
      } else {
        run = read_count(s, i);
      }
    }
    out.insert(out.end(), run, d);
  }
  return out;
}

std::string emit_abbrev(const std::vector<Elem> &coeffs) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size();) {
    std::size_t j = i;
    while (j < coeffs.size() && coeffs[j] == coeffs[i])
      ++j;
    out += static_cast<char>('0' + coeffs[i]);
    if (j - i > 1)
      out += "^{" + std::to_string(j - i) + "}";
    i = j;
  }
  return out;
}

std::vector<Elem> parse_coefficients(std::string_view text, int p) {
  if (text.find(',') == std::string_view::npos)
    return parse_abbrev(text, p);
  const std::string s = strip_space(text);
  std::vector<Elem> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t end = s.find(',', start);
    const std::string_view tok(s.data() + start, (end == std::string::npos ? s.size() : end) - start);
    long long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw ParseError("bad coefficient '" + std::string(tok) + "'");
    if (v < 0 || v >= p)
      throw ParseError("coefficient " + std::to_string(v) + " is not in [0, " +
                       std::to_string(p) + ")");
    out.push_back(static_cast<Elem>(v));
    if (end == std::string::npos)
      break;
    start = end + 1;
  }
  return out;
}

} // namespace qcsym

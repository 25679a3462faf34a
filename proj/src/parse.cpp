/*
   Copyright 2026 The liewidth Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "liewidth/parse.hpp"

#include <cctype>

namespace liewidth::detail {

std::vector<Token> tokenize(std::string_view text, bool derivative_tokens) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto is_ident_start = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
  auto is_ident = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (text.substr(i, 3) == "\xE2\x88\x92") {  // U+2212 MINUS SIGN
      out.push_back({Token::Minus, "-", start});
      i += 3;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({Token::Int, std::string(text.substr(start, i - start)), start});
      continue;
    }
    if (is_ident_start(c)) {
      if (derivative_tokens && c == 'd' && text.substr(i, 3) == "d/d" && i + 3 < text.size() && is_ident_start(text[i + 3])) {
        i += 3;
        while (i < text.size() && is_ident(text[i])) ++i;
        out.push_back({Token::Ident, std::string(text.substr(start, i - start)), start});
        continue;
      }
      while (i < text.size() && is_ident(text[i])) ++i;
      out.push_back({Token::Ident, std::string(text.substr(start, i - start)), start});
      continue;
    }
    Token::Kind k;
    switch (c) {
      case '+': k = Token::Plus; break;
      case '-': k = Token::Minus; break;
      case '*': k = Token::Star; break;
      case '/': k = Token::Slash; break;
      case '^': k = Token::Caret; break;
      case '(': k = Token::LParen; break;
      case ')': k = Token::RParen; break;
      default:
        throw Error(Errc::SyntaxError, std::string("unexpected character '") + c + "' at offset " + std::to_string(i));
    }
    out.push_back({k, std::string(1, c), start});
    ++i;
  }
  out.push_back({Token::End, "", text.size()});
  return out;
}

}  // namespace liewidth::detail

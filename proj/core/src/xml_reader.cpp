// Copyright 2026 The ctilint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cctype>
#include <map>
#include <string_view>

#include "ctilint/errors.hpp"
#include "ctilint/ingest.hpp"

namespace ctilint {

namespace {

constexpr std::size_t kMaxDepth = 256;

bool is_name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == ':';
}

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == ':' ||
         c == '-' || c == '.';
}

std::string_view local_name(std::string_view raw) {
  const std::size_t colon = raw.rfind(':');
  return colon == std::string_view::npos ? raw : raw.substr(colon + 1);
}

std::string trim(const std::string& text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin])))
    ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1])))
    --end;
  return text.substr(begin, end - begin);
}

class XmlReader {
 public:
  XmlReader(const std::string& text, const std::string& origin)
      : text_(text), origin_(origin) {}

  DocumentTree parse() {
    DocumentTree tree;
    tree.origin = origin_;
    tree.format = DocumentFormat::kXml;

    if (text_.size() >= 3 && text_.compare(0, 3, "\xEF\xBB\xBF") == 0)
      pos_ = 3;
    declaration_ok_at_ = pos_;
    skip_misc(/*allow_declaration=*/true);
    if (at_end()) fail("document has no root element");
    if (peek() != '<') fail("text outside the root element");
    tree.roots.push_back(parse_element(FieldPath(), 0));
    skip_misc(/*allow_declaration=*/false);
    if (!at_end()) fail("trailing content after the root element");

    for (auto& [prefix, uri] : namespaces_)
      tree.declared_namespaces.emplace_back(prefix, uri);
    return tree;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  bool looking_at(std::string_view token) const {
    return text_.compare(pos_, token.size(), token) == 0;
  }

  [[noreturn]] void fail(const std::string& reason) const {
    throw make_parse_error(reason, text_, pos_);
  }

  [[noreturn]] void unsupported(const std::string& construct) const {
    auto [line, column] = line_column_at(text_, pos_);
    throw UnsupportedConstructError(construct, pos_, line, column);
  }

  void skip_whitespace() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
      ++pos_;
  }

  // Skips whitespace, comments, and (optionally) the XML declaration in
  // prolog/epilog position. Rejects DOCTYPE and processing instructions.
  void skip_misc(bool allow_declaration) {
    while (true) {
      skip_whitespace();
      if (at_end()) return;
      if (looking_at("<!--")) {
        skip_comment();
        continue;
      }
      if (looking_at("<?xml") && allow_declaration && pos_ == declaration_ok_at_) {
        skip_declaration();
        allow_declaration = false;
        continue;
      }
      if (looking_at("<?")) unsupported("processing-instruction");
      if (looking_at("<!DOCTYPE") || looking_at("<!doctype"))
        unsupported("doctype");
      if (peek() == '<') return;
      fail("text outside the root element");
    }
  }

  void skip_comment() {
    pos_ += 4;
    const std::size_t end = text_.find("-->", pos_);
    if (end == std::string::npos) fail("unterminated comment");
    pos_ = end + 3;
  }

  void skip_declaration() {
    const std::size_t end = text_.find("?>", pos_);
    if (end == std::string::npos) fail("unterminated XML declaration");
    pos_ = end + 2;
  }

  std::string read_name() {
    if (at_end() || !is_name_start(peek())) fail("expected a name");
    const std::size_t start = pos_;
    ++pos_;
    while (!at_end() && is_name_char(peek())) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  std::string decode_entities(std::string_view raw, std::size_t raw_offset) {
    std::string out;
    out.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (raw[i] != '&') {
        out += raw[i];
        continue;
      }
      const std::size_t semi = raw.find(';', i + 1);
      if (semi == std::string_view::npos)
        throw make_parse_error("unterminated entity reference", text_,
                               raw_offset + i);
      const std::string_view entity = raw.substr(i + 1, semi - i - 1);
      if (entity == "lt") out += '<';
      else if (entity == "gt") out += '>';
      else if (entity == "amp") out += '&';
      else if (entity == "apos") out += '\'';
      else if (entity == "quot") out += '"';
      else if (!entity.empty() && entity[0] == '#') {
        out += decode_char_ref(entity, raw_offset + i);
      } else {
        throw make_parse_error(
            "unknown entity \"&" + std::string(entity) + ";\"", text_,
            raw_offset + i);
      }
      i = semi;
    }
    return out;
  }

  std::string decode_char_ref(std::string_view entity, std::size_t at) {
    std::uint32_t code = 0;
    std::size_t i = 1;
    int base = 10;
    if (i < entity.size() && (entity[i] == 'x' || entity[i] == 'X')) {
      base = 16;
      ++i;
    }
    if (i >= entity.size())
      throw make_parse_error("empty character reference", text_, at);
    for (; i < entity.size(); ++i) {
      const char c = entity[i];
      int digit;
      if (c >= '0' && c <= '9') digit = c - '0';
      else if (base == 16 && c >= 'a' && c <= 'f') digit = c - 'a' + 10;
      else if (base == 16 && c >= 'A' && c <= 'F') digit = c - 'A' + 10;
      else throw make_parse_error("bad character reference", text_, at);
      code = code * base + digit;
      if (code > 0x10FFFF)
        throw make_parse_error("character reference out of range", text_, at);
    }
    // Encode as UTF-8.
    std::string out;
    if (code < 0x80) {
      out += static_cast<char>(code);
    } else if (code < 0x800) {
      out += static_cast<char>(0xC0 | (code >> 6));
      out += static_cast<char>(0x80 | (code & 0x3F));
    } else if (code < 0x10000) {
      out += static_cast<char>(0xE0 | (code >> 12));
      out += static_cast<char>(0x80 | ((code >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (code & 0x3F));
    } else {
      out += static_cast<char>(0xF0 | (code >> 18));
      out += static_cast<char>(0x80 | ((code >> 12) & 0x3F));
      out += static_cast<char>(0x80 | ((code >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (code & 0x3F));
    }
    return out;
  }

  FieldNode parse_element(const FieldPath& parent_path, std::size_t depth) {
    if (depth > kMaxDepth) fail("element nesting too deep");
    const std::size_t span_begin = pos_;
    ++pos_;  // consume '<'
    const std::string raw_name = read_name();

    FieldNode node;
    node.raw_name = raw_name;
    node.path = parent_path.empty()
                    ? FieldPath({PathSegment{std::string(local_name(raw_name)),
                                             false}})
                    : parent_path.child(std::string(local_name(raw_name)));
    node.span.begin = span_begin;

    parse_attributes(node);

    skip_whitespace();
    if (at_end()) fail("unterminated start tag");
    if (looking_at("/>")) {
      pos_ += 2;
      node.span.end = pos_;
      return node;
    }
    if (peek() != '>') fail("expected '>' in start tag");
    ++pos_;

    std::string text_content;
    while (true) {
      if (at_end()) fail("unexpected end of input inside <" + raw_name + ">");
      if (looking_at("</")) {
        pos_ += 2;
        const std::string closing = read_name();
        if (closing != raw_name)
          fail("mismatched end tag: expected </" + raw_name + ">, found </" +
               closing + ">");
        skip_whitespace();
        if (at_end() || peek() != '>') fail("expected '>' in end tag");
        ++pos_;
        break;
      }
      if (looking_at("<!--")) {
        skip_comment();
        continue;
      }
      if (looking_at("<![CDATA[")) {
        pos_ += 9;
        const std::size_t end = text_.find("]]>", pos_);
        if (end == std::string::npos) fail("unterminated CDATA section");
        text_content.append(text_, pos_, end - pos_);
        pos_ = end + 3;
        continue;
      }
      if (looking_at("<!DOCTYPE") || looking_at("<!doctype"))
        unsupported("doctype");
      if (looking_at("<?")) unsupported("processing-instruction");
      if (peek() == '<') {
        node.children.push_back(parse_element(node.path, depth + 1));
        continue;
      }
      const std::size_t start = pos_;
      while (!at_end() && peek() != '<') ++pos_;
      text_content += decode_entities(
          std::string_view(text_).substr(start, pos_ - start), start);
    }

    node.value = trim(text_content);
    node.span.end = pos_;
    return node;
  }

  void parse_attributes(FieldNode& node) {
    std::map<std::string, bool> seen;
    while (true) {
      const bool had_space =
          !at_end() && std::isspace(static_cast<unsigned char>(peek()));
      skip_whitespace();
      if (at_end()) fail("unterminated start tag");
      if (peek() == '>' || looking_at("/>")) return;
      if (!had_space) fail("expected whitespace before attribute");
      const std::size_t attr_begin = pos_;
      const std::string raw_name = read_name();
      skip_whitespace();
      if (at_end() || peek() != '=') fail("expected '=' after attribute name");
      ++pos_;
      skip_whitespace();
      if (at_end() || (peek() != '"' && peek() != '\''))
        fail("attribute value must be quoted");
      const char quote = peek();
      ++pos_;
      const std::size_t value_begin = pos_;
      const std::size_t end = text_.find(quote, pos_);
      if (end == std::string::npos) fail("unterminated attribute value");
      std::string value = decode_entities(
          std::string_view(text_).substr(value_begin, end - value_begin),
          value_begin);
      pos_ = end + 1;

      if (raw_name == "xmlns") {
        namespaces_[""] = value;
        continue;
      }
      if (raw_name.starts_with("xmlns:")) {
        namespaces_[raw_name.substr(6)] = value;
        continue;
      }
      if (!seen.emplace(raw_name, true).second) {
        pos_ = attr_begin;
        fail("duplicate attribute \"" + raw_name + "\"");
      }
      FieldNode attribute;
      attribute.raw_name = raw_name;
      attribute.path =
          node.path.child(std::string(local_name(raw_name)), true);
      attribute.value = std::move(value);
      attribute.span = {attr_begin, pos_};
      node.children.push_back(std::move(attribute));
    }
  }

  const std::string& text_;
  const std::string& origin_;
  std::size_t pos_ = 0;
  std::size_t declaration_ok_at_ = 0;
  std::map<std::string, std::string> namespaces_;
};

}  // namespace

DocumentTree parse_xml(const std::string& text, const std::string& origin) {
  return XmlReader(text, origin).parse();
}

}  // namespace ctilint

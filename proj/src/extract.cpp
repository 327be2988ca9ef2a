#include "silentdiff/extract.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "silentdiff/lexer.hpp"

namespace silentdiff {
namespace {

enum class TypeKind { Class, Interface, Enum, Record, Annotation };

struct TypeContext {
  std::string qualified;   // package + nesting, dotted
  std::string simple;
  TypeKind kind = TypeKind::Class;
  std::vector<std::string> record_components;
};

constexpr std::array<std::string_view, 13> kMemberModifiers = {
    "public", "protected", "private",  "static",   "final",     "abstract", "native",
    "synchronized", "transient", "volatile", "strictfp", "default", "sealed",
};

int angle_delta(const Token& t) {
  if (t.kind != TokenKind::Operator) return 0;
  if (t.text == "<") return 1;
  if (t.text == ">") return -1;
  if (t.text == ">>") return -2;
  if (t.text == ">>>") return -3;
  return 0;
}

class FileParser {
 public:
  FileParser(std::string_view file, std::string_view src, const std::vector<Token>& all)
      : file_(file), src_(src) {
    // Code tokens plus, for each, the comments sitting in the gap before it.
    std::vector<const Token*> pending;
    for (const auto& t : all) {
      if (t.is_comment()) {
        pending.push_back(&t);
        continue;
      }
      toks_.push_back(&t);
      gaps_.push_back(std::move(pending));
      pending.clear();
    }
    match_brackets();
  }

  std::vector<MethodRecord> run() {
    std::size_t i = 0;
    std::string package;
    i = skip_annotations(i);
    if (at(i).is_keyword("package")) {
      ++i;
      while (i < toks_.size() && !at(i).is_punct(";")) package += at(i++).text;
      ++i;
    } else {
      i = 0;
    }
    TypeContext top{package, "", TypeKind::Class, {}};
    parse_members(i, toks_.size(), top, /*top_level=*/true);
    return std::move(out_);
  }

 private:
  const Token& at(std::size_t i) const {
    static const Token kEof{TokenKind::Punctuation, "", 0, 0, 0, 0};
    return i < toks_.size() ? *toks_[i] : kEof;
  }

  void match_brackets() {
    match_.assign(toks_.size(), 0);
    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < toks_.size(); ++i) {
      const auto& t = *toks_[i];
      if (t.kind != TokenKind::Punctuation || t.text.size() != 1) continue;
      char c = t.text[0];
      if (c == '(' || c == '[' || c == '{') {
        stack.push_back(i);
      } else if (c == ')' || c == ']' || c == '}') {
        char open = c == ')' ? '(' : c == ']' ? '[' : '{';
        if (stack.empty() || toks_[stack.back()]->text[0] != open) {
          throw ParseError(t.line, std::string("unbalanced '") + c + "'");
        }
        match_[stack.back()] = i;
        match_[i] = stack.back();
        stack.pop_back();
      }
    }
    if (!stack.empty()) {
      const auto& t = *toks_[stack.back()];
      throw ParseError(t.line, "unclosed '" + t.text + "'");
    }
  }

  bool is_open(std::size_t i) const {
    const auto& t = at(i);
    return t.kind == TokenKind::Punctuation && (t.text == "(" || t.text == "[" || t.text == "{");
  }

  // `@Name`, `@a.b.Name`, `@Name(...)`; not `@interface`.
  bool at_annotation(std::size_t i) const {
    return at(i).kind == TokenKind::AnnotationMarker && !at(i + 1).is_keyword("interface");
  }

  std::size_t skip_annotation(std::size_t i) const {
    ++i;
    if (at(i).kind == TokenKind::Identifier) ++i;
    while (at(i).is_punct(".") && at(i + 1).kind == TokenKind::Identifier) i += 2;
    if (at(i).is_punct("(")) i = match_[i] + 1;
    return i;
  }

  std::size_t skip_annotations(std::size_t i) const {
    while (at_annotation(i)) i = skip_annotation(i);
    return i;
  }

  std::size_t skip_angles(std::size_t i) const {
    int depth = 0;
    while (i < toks_.size()) {
      const auto& t = at(i);
      if (t.is_punct("{") || t.is_punct(";") || t.is_punct(")") || t.is_punct("}")) return i;
      if (is_open(i)) {
        i = match_[i] + 1;
        continue;
      }
      depth += angle_delta(t);
      ++i;
      if (depth <= 0) return i;
    }
    return i;
  }

  // Advances to the `;` ending a field or statement, jumping over brackets.
  // Returns the index after it, or `end` when the enclosing body closes first.
  std::size_t skip_to_semicolon(std::size_t i, std::size_t end) const {
    while (i < end) {
      if (at(i).is_punct(";")) return i + 1;
      if (at(i).is_punct("}")) return i;
      i = is_open(i) ? match_[i] + 1 : i + 1;
    }
    return end;
  }

  // Concatenates type tokens in [b, e) without whitespace, dropping
  // annotations and generic arguments; `...` becomes `[]`.
  std::string erase_type(std::size_t b, std::size_t e) const {
    std::string out;
    int depth = 0;
    for (std::size_t i = b; i < e;) {
      if (at_annotation(i)) {
        i = skip_annotation(i);
        continue;
      }
      const auto& t = at(i);
      int d = angle_delta(t);
      if (d != 0) {
        depth = std::max(0, depth + d);
        ++i;
        continue;
      }
      if (depth == 0) {
        if (t.is_punct("...")) {
          out += "[]";
        } else if (!t.is_keyword("final")) {
          out += t.text;
        }
      }
      ++i;
    }
    return out;
  }

  // Parses a type starting at i; returns the index after it.
  std::size_t parse_type(std::size_t i, std::size_t end) const {
    i = skip_annotations(i);
    if (at(i).kind != TokenKind::Identifier && at(i).kind != TokenKind::Keyword) return i;
    ++i;
    while (i < end) {
      if (angle_delta(at(i)) > 0) {
        i = skip_angles(i);
      } else if (at(i).is_punct(".") && at(i + 1).kind == TokenKind::Identifier) {
        i += 2;
      } else if (at(i).is_punct(".") && at_annotation(i + 1)) {
        i = skip_annotations(i + 1);
      } else if (at(i).is_punct("[") && at(i + 1).is_punct("]")) {
        i += 2;
      } else if (at_annotation(i)) {
        i = skip_annotations(i);
      } else {
        break;
      }
    }
    return i;
  }

  std::vector<std::string> parse_params(std::size_t open, std::size_t close) const {
    std::vector<std::string> params;
    std::size_t seg = open + 1;
    int angle = 0;
    auto flush = [&](std::size_t b, std::size_t e) {
      if (b >= e) return;
      // The name is the last identifier before any trailing `[]` pairs.
      std::size_t name = e;
      std::size_t dims_begin = e;
      while (dims_begin >= b + 2 && at(dims_begin - 1).is_punct("]") &&
             at(dims_begin - 2).is_punct("[")) {
        dims_begin -= 2;
      }
      if (dims_begin > b) name = dims_begin - 1;
      const auto& name_tok = at(name);
      if (name_tok.is_keyword("this")) return;  // receiver parameter
      std::string type = erase_type(b, name);
      for (std::size_t k = dims_begin; k < e; k += 2) type += "[]";
      params.push_back(std::move(type));
    };
    for (std::size_t i = open + 1; i < close;) {
      if (at_annotation(i)) {
        i = skip_annotation(i);
        continue;
      }
      const auto& t = at(i);
      angle = std::max(0, angle + angle_delta(t));
      if (angle == 0 && t.is_punct(",")) {
        flush(seg, i);
        seg = i + 1;
        ++i;
        continue;
      }
      i = is_open(i) ? match_[i] + 1 : i + 1;
    }
    flush(seg, close);
    return params;
  }

  // The nearest doc comment in the gaps before tokens [first, last], dropped
  // when an ordinary comment follows it.
  const Token* doc_for(std::size_t first, std::size_t last) const {
    const Token* doc = nullptr;
    for (std::size_t k = first; k <= last && k < gaps_.size(); ++k) {
      for (const Token* c : gaps_[k]) {
        doc = c->kind == TokenKind::DocComment ? c : nullptr;
      }
    }
    return doc;
  }

  void parse_members(std::size_t i, std::size_t end, const TypeContext& ctx, bool top_level) {
    if (ctx.kind == TypeKind::Enum) i = skip_enum_constants(i, end);
    while (i < end) {
      if (at(i).is_punct(";")) {
        ++i;
        continue;
      }
      if (top_level && at(i).is_keyword("import")) {
        i = skip_to_semicolon(i, end);
        continue;
      }
      std::size_t next = parse_member(i, end, ctx, top_level);
      i = next > i ? next : i + 1;
    }
  }

  std::size_t skip_enum_constants(std::size_t i, std::size_t end) const {
    while (i < end) {
      if (at(i).is_punct(";")) return i + 1;
      i = is_open(i) ? match_[i] + 1 : i + 1;
    }
    return end;
  }

  std::size_t parse_member(std::size_t start, std::size_t end, const TypeContext& ctx,
                           bool top_level) {
    std::size_t i = start;
    ModifierSet mods;
    bool has_access = false;
    while (i < end) {
      const auto& t = at(i);
      if (at_annotation(i)) {
        i = skip_annotation(i);
        continue;
      }
      bool sealed_pair = t.kind == TokenKind::Identifier && t.text == "non" &&
                         at(i + 1).is(TokenKind::Operator, "-") &&
                         at(i + 2).text == "sealed";
      if (sealed_pair) {
        i += 3;
        continue;
      }
      if ((t.kind == TokenKind::Keyword || t.text == "sealed") &&
          std::find(kMemberModifiers.begin(), kMemberModifiers.end(), t.text) !=
              kMemberModifiers.end()) {
        // `default` doubles as the annotation-element default value marker,
        // which never appears in modifier position.
        if (t.text == "public") mods.access = Access::Public, has_access = true;
        if (t.text == "protected") mods.access = Access::Protected, has_access = true;
        if (t.text == "private") mods.access = Access::Private, has_access = true;
        if (t.text == "static") mods.is_static = true;
        if (t.text == "final") mods.is_final = true;
        if (t.text == "abstract") mods.is_abstract = true;
        if (t.text == "native") mods.is_native = true;
        ++i;
        continue;
      }
      break;
    }
    if (i >= end) return end;

    const auto& head = at(i);
    if (head.is_punct("{")) return match_[i] + 1;  // initializer block

    if (head.is_keyword("class") || head.is_keyword("interface") || head.is_keyword("enum") ||
        (head.kind == TokenKind::AnnotationMarker && at(i + 1).is_keyword("interface")) ||
        (head.kind == TokenKind::Identifier && head.text == "record" &&
         at(i + 1).kind == TokenKind::Identifier &&
         (at(i + 2).is_punct("(") || angle_delta(at(i + 2)) > 0))) {
      return parse_type_decl(i, end, ctx);
    }
    if (top_level) return skip_to_semicolon(i, end);

    if (angle_delta(head) > 0) i = skip_angles(i);  // generic method

    std::size_t name_idx;
    std::string return_type;
    if (at(i).kind == TokenKind::Identifier && at(i + 1).is_punct("(")) {
      name_idx = i;
    } else if (ctx.kind == TypeKind::Record && at(i).kind == TokenKind::Identifier &&
               at(i).text == ctx.simple && at(i + 1).is_punct("{")) {
      return emit_method(start, i, i, ctx, mods, has_access, "", ctx.record_components,
                         i + 1, end);
    } else {
      std::size_t type_end = parse_type(i, end);
      if (type_end == i || at(type_end).kind != TokenKind::Identifier) {
        return skip_to_semicolon(i, end);
      }
      return_type = erase_type(i, type_end);
      name_idx = type_end;
    }
    if (!at(name_idx + 1).is_punct("(")) return skip_to_semicolon(name_idx, end);  // field

    std::size_t open = name_idx + 1;
    std::size_t close = match_[open];
    auto params = parse_params(open, close);
    std::size_t j = close + 1;
    while (at(j).is_punct("[") && at(j + 1).is_punct("]")) {
      return_type += "[]";
      j += 2;
    }
    return emit_method(start, name_idx, name_idx, ctx, mods, has_access, return_type,
                       std::move(params), j, end);
  }

  // `after` points just past the parameter list (or the record name for
  // compact constructors).
  std::size_t emit_method(std::size_t start, std::size_t name_idx, std::size_t doc_last,
                          const TypeContext& ctx, ModifierSet mods, bool has_access,
                          std::string return_type, std::vector<std::string> params,
                          std::size_t after, std::size_t end) {
    std::size_t j = after;
    if (at(j).is_keyword("throws")) {
      while (j < end && !at(j).is_punct("{") && !at(j).is_punct(";")) {
        j = is_open(j) ? match_[j] + 1 : j + 1;
      }
    }
    if (at(j).is_keyword("default")) {  // annotation element default value
      j = skip_to_semicolon(j, end);
      if (j > 0) --j;
    }

    MethodRecord rec;
    if (at(j).is_punct("{")) {
      std::size_t close = match_[j];
      const auto& open_tok = at(j);
      const auto& close_tok = at(close);
      rec.raw_body = std::string(src_.substr(open_tok.begin, close_tok.end - open_tok.begin));
      std::string joined;
      for (std::size_t k = j; k <= close; ++k) {
        if (!joined.empty()) joined += ' ';
        joined += at(k).text;
      }
      rec.body = std::move(joined);
      rec.lines = {at(start).line, close_tok.end_line};
      j = close + 1;
    } else if (at(j).is_punct(";")) {
      rec.lines = {at(start).line, at(j).end_line};
      ++j;
    } else {
      return skip_to_semicolon(j, end);
    }

    if (!has_access && (ctx.kind == TypeKind::Interface || ctx.kind == TypeKind::Annotation)) {
      mods.access = Access::Public;
    }
    rec.identity.qualified_class = ctx.qualified;
    rec.identity.method_name = at(name_idx).text;
    rec.identity.param_types = std::move(params);
    rec.identity.return_type = std::move(return_type);
    rec.modifiers = mods;
    rec.file = std::string(file_);
    if (const Token* doc = doc_for(start, doc_last)) {
      std::string normalized = normalize_comment(doc->text, false);
      if (!normalized.empty()) {
        rec.raw_doc_comment = doc->text;
        rec.doc_comment = std::move(normalized);
        rec.hide = has_hide_tag(doc->text);
      }
    }
    out_.push_back(std::move(rec));
    return j;
  }

  std::size_t parse_type_decl(std::size_t i, std::size_t end, const TypeContext& outer) {
    TypeContext ctx;
    const auto& kw = at(i);
    if (kw.kind == TokenKind::AnnotationMarker) {
      ctx.kind = TypeKind::Annotation;
      i += 2;
    } else {
      ctx.kind = kw.text == "interface" ? TypeKind::Interface
                 : kw.text == "enum"    ? TypeKind::Enum
                 : kw.text == "record"  ? TypeKind::Record
                                        : TypeKind::Class;
      ++i;
    }
    if (at(i).kind != TokenKind::Identifier) return skip_to_semicolon(i, end);
    ctx.simple = at(i).text;
    ctx.qualified = outer.qualified.empty() ? ctx.simple : outer.qualified + "." + ctx.simple;
    ++i;
    if (angle_delta(at(i)) > 0) i = skip_angles(i);
    if (ctx.kind == TypeKind::Record && at(i).is_punct("(")) {
      ctx.record_components = parse_params(i, match_[i]);
      i = match_[i] + 1;
    }
    while (i < end && !at(i).is_punct("{")) {
      if (at(i).is_punct(";") || at(i).is_punct("}")) return i;
      i = at(i).is_punct("(") || at(i).is_punct("[") ? match_[i] + 1 : i + 1;
    }
    if (i >= end) return end;
    std::size_t close = match_[i];
    parse_members(i + 1, close, ctx, /*top_level=*/false);
    return close + 1;
  }

  std::string_view file_;
  std::string_view src_;
  std::vector<const Token*> toks_;
  std::vector<std::vector<const Token*>> gaps_;
  std::vector<std::size_t> match_;
  std::vector<MethodRecord> out_;
};

}  // namespace

std::string_view to_string(Access access) {
  switch (access) {
    case Access::Public: return "public";
    case Access::Protected: return "protected";
    case Access::Private: return "private";
    case Access::Default: return "default";
  }
  return "default";
}

std::string ModifierSet::label() const {
  std::string out(to_string(access));
  if (is_static) out += " static";
  if (is_final) out += " final";
  if (is_abstract) out += " abstract";
  if (is_native) out += " native";
  return out;
}

std::string MethodIdentity::simple_class_name() const {
  auto dot = qualified_class.rfind('.');
  return dot == std::string::npos ? qualified_class : qualified_class.substr(dot + 1);
}

std::string MethodIdentity::display() const {
  std::string out = qualified_class + ": ";
  if (!return_type.empty()) out += return_type + " ";
  out += method_name + "(";
  for (std::size_t i = 0; i < param_types.size(); ++i) {
    if (i) out += ",";
    out += param_types[i];
  }
  return out + ")";
}

bool has_hide_tag(std::string_view raw) {
  for (auto pos = raw.find("@hide"); pos != std::string_view::npos;
       pos = raw.find("@hide", pos + 1)) {
    std::size_t after = pos + 5;
    if (after >= raw.size()) return true;
    unsigned char c = static_cast<unsigned char>(raw[after]);
    if (!(std::isalnum(c) || c == '_' || c == '$')) return true;
  }
  return false;
}

std::vector<MethodRecord> extract_methods(std::string_view file, std::string_view text) {
  auto tokens = tokenize_source(text);
  return FileParser(file, text, tokens).run();
}

}  // namespace silentdiff

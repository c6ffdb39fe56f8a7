#include "frobcoh_cli/builtins.hpp"

#include <charconv>

namespace frobcoh::cli {

namespace {

int parse_order(const std::string& text, const std::string& name) {
  int n = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (ec != std::errc() || ptr != text.data() + text.size() || n < 1) {
    throw Error(ErrorCode::InvalidArgument, "bad integer in builtin '" + name + "'");
  }
  return n;
}

void reject_field(const std::optional<FieldSpec>& field, const std::string& name) {
  if (field) throw Error(ErrorCode::InvalidArgument, "--field does not apply to builtin '" + name + "'");
}

bool starts_with(const std::string& s, const char* prefix) { return s.rfind(prefix, 0) == 0; }

}  // namespace

AlgebraPresentation resolve_builtin(const std::string& name, const std::optional<FieldSpec>& field) {
  const FieldSpec f = field.value_or(FieldSpec::rationals());
  if (name == "complex") {
    reject_field(field, name);
    return build_complex();
  }
  if (name == "s3alt") {
    reject_field(field, name);
    return build_s3_alt();
  }
  if (name == "group:Z2") return build_cyclic_group(2, f);
  if (name == "group:S3") return build_s3(f);
  if (starts_with(name, "group:Zn:")) return build_cyclic_group(parse_order(name.substr(9), name), f);
  if (starts_with(name, "poly:")) return build_poly(parse_order(name.substr(5), name), f);
  if (starts_with(name, "qpoly:")) {
    reject_field(field, name);
    std::string text = name.substr(6);
    // "i" and "-i" abbreviate 1i and -1i.
    if (text == "i") text = "1i";
    if (text == "-i") text = "-1i";
    return build_qpoly(parse_scalar(text, FieldSpec::gaussian()));
  }
  throw Error(ErrorCode::InvalidArgument, "unknown builtin '" + name + "'");
}

const std::vector<std::string>& standard_builtins() {
  static const std::vector<std::string> names{"complex", "poly:2", "poly:3", "group:Z2", "group:S3", "s3alt", "qpoly:i"};
  return names;
}

}  // namespace frobcoh::cli

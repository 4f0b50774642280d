#include "sympsum/report.hpp"

#include "sympsum/numfmt.hpp"

namespace sympsum {

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

std::string opt_json(const std::optional<double>& v) {
  return v ? format_sig17(*v) : std::string("null");
}

std::string opt_csv(const std::optional<double>& v) {
  return v ? format_sig17(*v) : std::string();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string VerificationReport::to_json(bool include_elapsed) const {
  std::string j = "{";
  j += "\"name\":\"" + json_escape(name) + "\"";
  j += ",\"params\":\"" + json_escape(params) + "\"";
  j += ",\"seed\":" + std::to_string(seed);
  j += ",\"samples\":" + std::to_string(samples);
  j += ",\"max_residual\":" + format_sig17(max_residual);
  j += ",\"mean_residual\":" + format_sig17(mean_residual);
  j += ",\"violations\":" + std::to_string(violations);
  j += ",\"estimate\":" + opt_json(estimate);
  j += ",\"std_error\":" + opt_json(std_error);
  j += ",\"expected\":" + opt_json(expected);
  j += ",\"status\":\"" + status() + "\"";
  j += ",\"note\":\"" + json_escape(note) + "\"";
  if (include_elapsed) j += ",\"elapsed_seconds\":" + format_sig17(elapsed_seconds);
  j += "}";
  return j;
}

std::string VerificationReport::csv_header(bool include_elapsed) {
  std::string h =
      "name,params,seed,samples,max_residual,mean_residual,violations,"
      "estimate,std_error,expected,status,note";
  if (include_elapsed) h += ",elapsed_seconds";
  return h;
}

std::string VerificationReport::to_csv(bool include_elapsed) const {
  std::string row = csv_field(name) + "," + csv_field(params) + "," + std::to_string(seed) + "," +
                    std::to_string(samples) + "," + format_sig17(max_residual) + "," +
                    format_sig17(mean_residual) + "," + std::to_string(violations) + "," +
                    opt_csv(estimate) + "," + opt_csv(std_error) + "," + opt_csv(expected) + "," +
                    status() + "," + csv_field(note);
  if (include_elapsed) row += "," + format_sig17(elapsed_seconds);
  return row;
}

std::string VerificationReport::to_text() const {
  std::string t = "[" + status() + "] " + name + " (" + params + ")";
  t += " samples=" + std::to_string(samples);
  t += " max_residual=" + format_sig17(max_residual);
  t += " violations=" + std::to_string(violations);
  if (estimate) {
    t += " estimate=" + format_sig17(*estimate);
    if (std_error) t += "+-" + format_sig17(*std_error);
  }
  if (expected) t += " expected=" + format_sig17(*expected);
  if (!note.empty()) t += " note=" + note;
  return t;
}

}  // namespace sympsum

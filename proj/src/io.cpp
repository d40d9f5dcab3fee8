#include "lop/io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace lop {

namespace {

// Yields whitespace-separated tokens, skipping '#' comment lines.
class TokenReader {
public:
  explicit TokenReader(std::istream& in) : in_(in) {}

  bool next(std::string& token) {
    while (!(line_ >> token)) {
      std::string raw;
      if (!std::getline(in_, raw)) return false;
      const auto first = raw.find_first_not_of(" \t\r");
      if (first != std::string::npos && raw[first] == '#') raw.clear();
      line_.clear();
      line_.str(raw);
    }
    return true;
  }

private:
  std::istream& in_;
  std::istringstream line_;
};

double parse_real(const std::string& token) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &used);
  } catch (const std::exception&) {
    throw InvalidArgument("instance: cannot parse '" + token + "' as a real");
  }
  if (used != token.size()) throw InvalidArgument("instance: cannot parse '" + token + "' as a real");
  return value;
}

}  // namespace

LopInstance read_instance(std::istream& in) {
  TokenReader reader(in);
  std::string token;
  if (!reader.next(token)) throw InvalidArgument("instance: missing dimension");
  std::size_t used = 0;
  long n = 0;
  try {
    n = std::stol(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || n < 2) throw InvalidArgument("instance: bad dimension '" + token + "'");

  LopInstance::Matrix a(n, n);
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) {
      if (!reader.next(token)) throw InvalidArgument("instance: truncated matrix");
      a(i, j) = parse_real(token);
    }
  }
  if (reader.next(token)) throw InvalidArgument("instance: trailing data after matrix");
  return LopInstance(std::move(a), kDiagonalReadTolerance);
}

LopInstance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return read_instance(in);
}

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_instance(std::ostream& out, const LopInstance& inst, const std::vector<std::string>& comments) {
  const int n = inst.n();
  out << n << '\n';
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j > 0) out << ' ';
      out << format_real(inst(i, j));
    }
    out << '\n';
  }
  for (const auto& c : comments) out << "# " << c << '\n';
}

void save_instance(const std::filesystem::path& path, const LopInstance& inst,
                   const std::vector<std::string>& comments) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  write_instance(out, inst, comments);
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace lop

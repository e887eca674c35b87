#ifndef PGCOVER_IO_HPP
#define PGCOVER_IO_HPP

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "pgcover/covers.hpp"

namespace pgcover {
namespace io_detail {

inline std::string strip(const std::string& line) {
  std::string s = line;
  const std::size_t hash = s.find('#');
  if (hash != std::string::npos) s.erase(hash);
  const std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

inline std::vector<std::int64_t> parse_coords(const std::string& text, int line_no) {
  std::vector<std::int64_t> out;
  std::string item;
  std::istringstream ss(text);
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const std::int64_t v = std::stoll(item, &used);
      while (used < item.size() && (item[used] == ' ' || item[used] == '\t')) ++used;
      if (used != item.size()) throw std::invalid_argument("trailing junk");
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError(line_no, "bad coordinate '" + item + "'");
    }
  }
  if (out.empty()) throw ParseError(line_no, "empty coordinate list");
  return out;
}

struct Header {
  std::uint32_t p = 0;
  int dim = 0;
};

inline Header parse_header(const std::string& line, char dim_key, int line_no) {
  std::istringstream ss(line);
  std::string kp, kd;
  long long p = 0, d = 0;
  if (!(ss >> kp >> p >> kd >> d) || kp != "p" || kd != std::string(1, dim_key) || p < 2 || d < 1)
    throw ParseError(line_no, std::string("expected header 'p <prime> ") + dim_key +
                                  " <value>'");
  std::string rest;
  if (ss >> rest) throw ParseError(line_no, "trailing tokens in header");
  return {static_cast<std::uint32_t>(p), static_cast<int>(d)};
}

}  // namespace io_detail

/// Point-set file: "p <prime> m <dimension>", then one comma-separated
/// coordinate row per line (any representatives; reduced mod p and
/// normalized on load). '#' starts a comment.
inline PointSet read_point_set(std::istream& in) {
  std::string line;
  int line_no = 0;
  std::string header;
  while (std::getline(in, line)) {
    ++line_no;
    header = io_detail::strip(line);
    if (!header.empty()) break;
  }
  if (header.empty()) throw ParseError(line_no, "missing header line");
  const io_detail::Header h = io_detail::parse_header(header, 'm', line_no);
  PrimeModulus mod(2);
  try {
    mod = PrimeModulus(h.p);
  } catch (const Error& e) {
    throw ParseError(line_no, e.what());
  }
  const SpaceDescriptor space(h.dim, mod);
  std::vector<ProjectivePoint> pts;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = io_detail::strip(line);
    if (body.empty()) continue;
    const std::vector<std::int64_t> raw = io_detail::parse_coords(body, line_no);
    if (raw.size() != static_cast<std::size_t>(h.dim) + 1)
      throw ParseError(line_no, "expected " + std::to_string(h.dim + 1) + " coordinates, got " +
                                    std::to_string(raw.size()));
    try {
      pts.push_back(ProjectivePoint(FieldVector(mod, raw)));
    } catch (const Error& e) {
      throw ParseError(line_no, e.what());
    }
  }
  try {
    return PointSet(space, std::move(pts));
  } catch (const Error& e) {
    throw ParseError(line_no, e.what());
  }
}

inline void write_point_set(std::ostream& out, const PointSet& b) {
  out << "p " << b.space().mod.value() << " m " << b.space().m << "\n";
  for (const ProjectivePoint& pt : b.points()) {
    for (std::size_t i = 0; i < pt.size(); ++i) out << (i ? "," : "") << pt[i];
    out << "\n";
  }
}

/// Cover file: "p <prime> d <rank>", then one member per line, either
/// "dual: c0,c1,..." or "gens: v1; v2; ..." (generator exponent vectors
/// separated by semicolons). Mixed lines allowed; '#' comments.
inline DualCover read_cover(std::istream& in) {
  std::string line;
  int line_no = 0;
  std::string header;
  while (std::getline(in, line)) {
    ++line_no;
    header = io_detail::strip(line);
    if (!header.empty()) break;
  }
  if (header.empty()) throw ParseError(line_no, "missing header line");
  const io_detail::Header h = io_detail::parse_header(header, 'd', line_no);
  PrimeModulus mod(2);
  try {
    mod = PrimeModulus(h.p);
  } catch (const Error& e) {
    throw ParseError(line_no, e.what());
  }
  std::vector<ProjectivePoint> duals;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = io_detail::strip(line);
    if (body.empty()) continue;
    const std::size_t colon = body.find(':');
    if (colon == std::string::npos) throw ParseError(line_no, "expected 'dual:' or 'gens:' line");
    const std::string tag = io_detail::strip(body.substr(0, colon));
    const std::string payload = body.substr(colon + 1);
    try {
      if (tag == "dual") {
        const std::vector<std::int64_t> raw = io_detail::parse_coords(payload, line_no);
        if (raw.size() != static_cast<std::size_t>(h.dim))
          throw ParseError(line_no, "dual must have d coordinates");
        duals.push_back(ProjectivePoint(FieldVector(mod, raw)));
      } else if (tag == "gens") {
        SubgroupDescriptor sub;
        std::string part;
        std::istringstream ps(payload);
        while (std::getline(ps, part, ';')) {
          const std::string g = io_detail::strip(part);
          if (g.empty()) continue;
          const std::vector<std::int64_t> raw = io_detail::parse_coords(g, line_no);
          if (raw.size() != static_cast<std::size_t>(h.dim))
            throw ParseError(line_no, "generator must have d coordinates");
          sub.generators.push_back(FieldVector(mod, raw));
        }
        if (sub.generators.empty()) throw ParseError(line_no, "empty generator list");
        duals.push_back(dual_from_generators(sub));
      } else {
        throw ParseError(line_no, "unknown line tag '" + tag + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(line_no, e.what());
    }
  }
  try {
    return DualCover(mod, h.dim, std::move(duals));
  } catch (const Error& e) {
    throw ParseError(line_no, e.what());
  }
}

inline void write_cover(std::ostream& out, const DualCover& c) {
  out << "p " << c.mod().value() << " d " << c.d() << "\n";
  for (const ProjectivePoint& b : c.duals()) {
    out << "dual: ";
    for (std::size_t i = 0; i < b.size(); ++i) out << (i ? "," : "") << b[i];
    out << "\n";
  }
}

}  // namespace pgcover

#endif

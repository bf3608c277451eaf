#include "tvho/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace tvho {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr char kMagic[8] = {'T', 'V', 'H', 'O', 'V', 'O', 'L', '1'};
constexpr std::size_t kHeaderBytes = 21;

std::uint32_t read_u32le(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

void write_u32le(std::ostream& os, std::uint32_t v) {
  const char b[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
                     static_cast<char>((v >> 16) & 0xff), static_cast<char>((v >> 24) & 0xff)};
  os.write(b, 4);
}

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }

}  // namespace

std::uint8_t quantize_u8(double v) {
  double r = v >= 0.0 ? std::floor(v + 0.5) : std::ceil(v - 0.5);  // half away from zero
  r = std::clamp(r, 0.0, 255.0);
  return static_cast<std::uint8_t>(r);
}

void write_volume(const std::string& path, const VideoTensor& f, VolumeDtype dtype) {
  std::ofstream os(path, std::ios::binary);
  if (!os) fail("write_volume: cannot open '" + path + "' for writing");
  os.write(kMagic, 8);
  write_u32le(os, static_cast<std::uint32_t>(f.m));
  write_u32le(os, static_cast<std::uint32_t>(f.n));
  write_u32le(os, static_cast<std::uint32_t>(f.frames));
  const char dt = static_cast<char>(dtype);
  os.write(&dt, 1);
  if (dtype == VolumeDtype::Float64) {
    static_assert(sizeof(double) == 8);
    // in-memory doubles are little-endian on every supported target
    os.write(reinterpret_cast<const char*>(f.data.data()),
             static_cast<std::streamsize>(f.size() * 8));
  } else {
    std::vector<std::uint8_t> buf(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) buf[i] = quantize_u8(f.data[static_cast<Eigen::Index>(i)]);
    os.write(reinterpret_cast<const char*>(buf.data()),
             static_cast<std::streamsize>(buf.size()));
  }
  if (!os) fail("write_volume: write to '" + path + "' failed");
}

VideoTensor read_volume(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) fail("read_volume: cannot open '" + path + "'");
  std::vector<unsigned char> raw((std::istreambuf_iterator<char>(is)),
                                 std::istreambuf_iterator<char>());
  if (raw.size() < kHeaderBytes)
    fail("read_volume: '" + path + "' truncated header: expected at least " +
         std::to_string(kHeaderBytes) + " bytes, got " + std::to_string(raw.size()));
  if (std::memcmp(raw.data(), kMagic, 8) != 0)
    fail("read_volume: '" + path + "' bad magic at byte offset 0 (want TVHOVOL1)");
  const std::uint32_t m = read_u32le(raw.data() + 8);
  const std::uint32_t n = read_u32le(raw.data() + 12);
  const std::uint32_t N = read_u32le(raw.data() + 16);
  const unsigned char dtype_byte = raw[20];
  if (dtype_byte > 1)
    fail("read_volume: '" + path + "' unknown dtype byte " + std::to_string(dtype_byte) +
         " at byte offset 20");
  if (m == 0 || n == 0 || N == 0)
    fail("read_volume: '" + path + "' zero dimension in header");
  const std::uint64_t count = static_cast<std::uint64_t>(m) * n * N;
  const std::uint64_t elem = dtype_byte == 0 ? 8 : 1;
  if (count > (std::uint64_t{1} << 32))
    fail("read_volume: '" + path + "' header size overflow: " + std::to_string(count) +
         " elements");
  const std::uint64_t expect = kHeaderBytes + count * elem;
  if (raw.size() != expect)
    fail("read_volume: '" + path + "' truncated payload: expected " + std::to_string(expect) +
         " bytes, got " + std::to_string(raw.size()));

  VideoTensor f(static_cast<int>(m), static_cast<int>(n), static_cast<int>(N));
  const unsigned char* payload = raw.data() + kHeaderBytes;
  if (dtype_byte == 0) {
    std::memcpy(f.data.data(), payload, count * 8);
  } else {
    for (std::uint64_t i = 0; i < count; ++i)
      f.data[static_cast<Eigen::Index>(i)] = static_cast<double>(payload[i]);
  }
  return f;
}

namespace {

// One PGM token, skipping whitespace and '#' comment lines.
std::string pgm_token(std::istream& is) {
  std::string tok;
  int c;
  while ((c = is.get()) != EOF) {
    if (c == '#') {
      while ((c = is.get()) != EOF && c != '\n') {
      }
      continue;
    }
    if (std::isspace(c)) {
      if (!tok.empty()) return tok;
      continue;
    }
    tok.push_back(static_cast<char>(c));
  }
  return tok;
}

struct PgmFrame {
  int w = 0, h = 0;
  std::vector<std::uint8_t> pix;  // row-major
};

PgmFrame read_pgm(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) fail("import_frames: cannot open '" + path + "'");
  if (pgm_token(is) != "P5") fail("import_frames: '" + path + "' is not a binary (P5) PGM");
  PgmFrame fr;
  try {
    fr.w = std::stoi(pgm_token(is));
    fr.h = std::stoi(pgm_token(is));
    const int maxval = std::stoi(pgm_token(is));
    if (maxval != 255)
      fail("import_frames: '" + path + "' maxval " + std::to_string(maxval) +
           " unsupported (only 255)");
  } catch (const std::invalid_argument&) {
    fail("import_frames: '" + path + "' malformed PGM header");
  }
  if (fr.w <= 0 || fr.h <= 0) fail("import_frames: '" + path + "' non-positive dimensions");
  fr.pix.resize(static_cast<std::size_t>(fr.w) * fr.h);
  is.read(reinterpret_cast<char*>(fr.pix.data()), static_cast<std::streamsize>(fr.pix.size()));
  if (static_cast<std::size_t>(is.gcount()) != fr.pix.size())
    fail("import_frames: '" + path + "' truncated pixel data");
  return fr;
}

}  // namespace

VideoTensor import_frames(const std::string& dir) {
  std::vector<std::string> paths;
  if (!fs::is_directory(dir)) fail("import_frames: '" + dir + "' is not a directory");
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".pgm")
      paths.push_back(e.path().string());
  }
  if (paths.empty()) fail("import_frames: no .pgm files in '" + dir + "'");
  std::sort(paths.begin(), paths.end());

  std::vector<PgmFrame> frames;
  frames.reserve(paths.size());
  for (const std::string& p : paths) {
    PgmFrame fr = read_pgm(p);
    if (!frames.empty() && (fr.w != frames[0].w || fr.h != frames[0].h))
      fail("import_frames: mixed frame sizes: '" + paths[0] + "' is " +
           std::to_string(frames[0].w) + "x" + std::to_string(frames[0].h) + " but '" + p +
           "' is " + std::to_string(fr.w) + "x" + std::to_string(fr.h));
    frames.push_back(std::move(fr));
  }

  const int m = frames[0].h, n = frames[0].w, N = static_cast<int>(frames.size());
  VideoTensor f(m, n, N);
  for (int t = 0; t < N; ++t)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j)
        f.at(i, j, t) = static_cast<double>(frames[static_cast<std::size_t>(t)]
                                                .pix[static_cast<std::size_t>(i) * n + j]);
  return f;
}

namespace {

double parse_real(const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  double x;
  try {
    x = std::stod(v, &pos);
  } catch (const std::exception&) {
    fail("config: key '" + key + "' has non-numeric value '" + v + "'");
  }
  if (pos != v.size()) fail("config: key '" + key + "' has trailing junk in value '" + v + "'");
  return x;
}

int parse_int(const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  long x;
  try {
    x = std::stol(v, &pos);
  } catch (const std::exception&) {
    fail("config: key '" + key + "' has non-integer value '" + v + "'");
  }
  if (pos != v.size()) fail("config: key '" + key + "' has trailing junk in value '" + v + "'");
  return static_cast<int>(x);
}

BoundaryCondition parse_bc(const std::string& key, const std::string& v) {
  // value is a bc name, optionally ":0" or ":1" for the shift
  BoundaryCondition bc;
  std::string name = v;
  const std::size_t colon = v.find(':');
  if (colon != std::string::npos) {
    name = v.substr(0, colon);
    const std::string s = v.substr(colon + 1);
    if (s != "0" && s != "1") fail("config: key '" + key + "' shift must be 0 or 1, got '" + s + "'");
    bc.shift = s == "1" ? 1 : 0;
  }
  try {
    bc.kind = bc_from_name(name);
  } catch (const std::exception&) {
    fail("config: key '" + key + "' has unknown boundary condition '" + name + "'");
  }
  return bc;
}

}  // namespace

SolverConfig parse_config_text(const std::string& text) {
  SolverConfig cfg;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    // trim
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);

    std::istringstream ls(line);
    std::string key, value;
    ls >> key;
    std::getline(ls, value);
    const auto vb = value.find_first_not_of(" \t=");
    value = vb == std::string::npos ? std::string() : value.substr(vb);
    const auto ve = value.find_last_not_of(" \t\r");
    if (ve != std::string::npos) value = value.substr(0, ve + 1);
    if (value.empty())
      fail("config: line " + std::to_string(lineno) + ": key '" + key + "' has no value");

    if (key == "c1") cfg.c1 = parse_real(key, value);
    else if (key == "c2") cfg.c2 = parse_real(key, value);
    else if (key == "c3") cfg.c3 = parse_real(key, value);
    else if (key == "mu1") cfg.mu1 = parse_real(key, value);
    else if (key == "mu2") cfg.mu2 = parse_real(key, value);
    else if (key == "mu3") cfg.mu3 = parse_real(key, value);
    else if (key == "rho") cfg.rho = parse_real(key, value);
    else if (key == "eps") cfg.eps = parse_real(key, value);
    else if (key == "max_iter") cfg.max_iter = parse_int(key, value);
    else if (key == "tv") {
      if (value == "aniso") cfg.tv = TvNorm::Anisotropic;
      else if (value == "iso") cfg.tv = TvNorm::Isotropic;
      else fail("config: key 'tv' must be aniso or iso, got '" + value + "'");
    } else if (key == "bc_x") cfg.bc_x = parse_bc(key, value);
    else if (key == "bc_y") cfg.bc_y = parse_bc(key, value);
    else if (key == "bc_t") cfg.bc_t = parse_bc(key, value);
    else if (key == "kernel_length") cfg.kernel_length = parse_int(key, value);
    else if (key == "kernel_accuracy") cfg.kernel_accuracy = parse_int(key, value);
    else if (key == "dt_x") cfg.dt_x = parse_real(key, value);
    else if (key == "dt_y") cfg.dt_y = parse_real(key, value);
    else if (key == "dt_t") cfg.dt_t = parse_real(key, value);
    else if (key == "wavelet") {
      try {
        cfg.wavelet = wavelet_from_name(value);
      } catch (const std::exception&) {
        fail("config: key 'wavelet' must be symmlet10 or haar, got '" + value + "'");
      }
    } else if (key == "wavelet_levels") cfg.wavelet_levels = parse_int(key, value);
    else fail("config: line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
  cfg.validate();
  return cfg;
}

SolverConfig read_config(const std::string& path) {
  std::ifstream is(path);
  if (!is) fail("read_config: cannot open '" + path + "'");
  std::ostringstream os;
  os << is.rdbuf();
  return parse_config_text(os.str());
}

namespace {

std::string fmt17(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::string bc_text(const BoundaryCondition& bc) {
  return std::string(bc_name(bc.kind)) + ":" + std::to_string(bc.shift);
}

}  // namespace

std::string config_text(const SolverConfig& cfg) {
  std::ostringstream os;
  os << "c1 " << fmt17(cfg.c1) << '\n'
     << "c2 " << fmt17(cfg.c2) << '\n'
     << "c3 " << fmt17(cfg.c3) << '\n'
     << "mu1 " << fmt17(cfg.mu1) << '\n'
     << "mu2 " << fmt17(cfg.mu2) << '\n'
     << "mu3 " << fmt17(cfg.mu3) << '\n'
     << "rho " << fmt17(cfg.rho) << '\n'
     << "eps " << fmt17(cfg.eps) << '\n'
     << "max_iter " << cfg.max_iter << '\n'
     << "tv " << (cfg.tv == TvNorm::Anisotropic ? "aniso" : "iso") << '\n'
     << "bc_x " << bc_text(cfg.bc_x) << '\n'
     << "bc_y " << bc_text(cfg.bc_y) << '\n'
     << "bc_t " << bc_text(cfg.bc_t) << '\n'
     << "kernel_length " << cfg.kernel_length << '\n'
     << "kernel_accuracy " << cfg.kernel_accuracy << '\n'
     << "dt_x " << fmt17(cfg.dt_x) << '\n'
     << "dt_y " << fmt17(cfg.dt_y) << '\n'
     << "dt_t " << fmt17(cfg.dt_t) << '\n'
     << "wavelet " << wavelet_name(cfg.wavelet) << '\n'
     << "wavelet_levels " << cfg.wavelet_levels << '\n';
  return os.str();
}

void write_plan_sidecar(const std::string& path, const PlanSidecar& p) {
  json j;
  j["m"] = p.m;
  j["n"] = p.n;
  j["N"] = p.frames;
  j["rate"] = p.rate;
  j["seed"] = p.seed;
  j["transform"] = measurement_name(p.transform);
  std::ofstream os(path);
  if (!os) fail("write_plan_sidecar: cannot open '" + path + "'");
  os << j.dump(2) << '\n';
  if (!os) fail("write_plan_sidecar: write to '" + path + "' failed");
}

PlanSidecar read_plan_sidecar(const std::string& path) {
  std::ifstream is(path);
  if (!is) fail("read_plan_sidecar: cannot open '" + path + "'");
  json j;
  try {
    is >> j;
  } catch (const json::parse_error& e) {
    fail("read_plan_sidecar: '" + path + "' is not valid JSON: " + e.what());
  }
  PlanSidecar p;
  try {
    p.m = j.at("m").get<int>();
    p.n = j.at("n").get<int>();
    p.frames = j.at("N").get<int>();
    p.rate = j.at("rate").get<double>();
    p.seed = j.at("seed").get<std::uint64_t>();
    p.transform = measurement_from_name(j.at("transform").get<std::string>());
  } catch (const json::exception& e) {
    fail("read_plan_sidecar: '" + path + "' missing or malformed field: " + e.what());
  }
  if (p.m <= 0 || p.n <= 0 || p.frames <= 0 || !(p.rate > 0.0 && p.rate <= 1.0))
    fail("read_plan_sidecar: '" + path + "' has out-of-range dimensions or rate");
  return p;
}

std::string tvho_version() { return "1.0.0"; }

void write_run_metadata(const std::string& path, const std::string& command,
                        const std::string& args_json, double wall_time_s) {
  json j;
  j["tool"] = "tvho";
  j["version"] = tvho_version();
  j["command"] = command;
  j["args"] = json::parse(args_json.empty() ? "{}" : args_json);
  j["wall_time_s"] = wall_time_s;
  std::ofstream os(path);
  if (!os) fail("write_run_metadata: cannot open '" + path + "'");
  os << j.dump(2) << '\n';
}

}  // namespace tvho

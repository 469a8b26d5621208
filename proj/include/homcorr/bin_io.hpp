#pragma once

#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace homcorr {

// All file formats are little-endian. These helpers assume a little-endian
// host (asserted at startup in the CLI) and read/write raw bytes.

inline void write_bytes(std::ostream& os, const void* p, size_t n) {
  os.write(static_cast<const char*>(p), static_cast<std::streamsize>(n));
  if (!os) throw std::runtime_error("write failed");
}

inline void read_bytes(std::istream& is, void* p, size_t n) {
  is.read(static_cast<char*>(p), static_cast<std::streamsize>(n));
  if (static_cast<size_t>(is.gcount()) != n)
    throw std::runtime_error("unexpected end of file");
}

template <typename T>
void write_pod(std::ostream& os, T v) {
  static_assert(std::is_trivially_copyable_v<T>);
  write_bytes(os, &v, sizeof(T));
}

template <typename T>
T read_pod(std::istream& is) {
  static_assert(std::is_trivially_copyable_v<T>);
  T v;
  read_bytes(is, &v, sizeof(T));
  return v;
}

inline void write_magic(std::ostream& os, const char magic[5]) {
  write_bytes(os, magic, 4);
}

inline void expect_magic(std::istream& is, const char magic[5],
                         const std::string& what) {
  char buf[4];
  read_bytes(is, buf, 4);
  if (std::memcmp(buf, magic, 4) != 0)
    throw std::runtime_error(what + ": bad magic");
}

inline void write_f64_array(std::ostream& os, const std::vector<double>& v) {
  write_bytes(os, v.data(), v.size() * sizeof(double));
}

inline void read_f64_array(std::istream& is, std::vector<double>& v, size_t n) {
  v.resize(n);
  read_bytes(is, v.data(), n * sizeof(double));
}

}  // namespace homcorr

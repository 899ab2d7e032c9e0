#include "numforge/io.hpp"

#include <unistd.h>

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace numforge::io {

AtomicWriter::AtomicWriter(const std::string& path)
    : path_(path),
      tmp_path_(path + ".tmp." + std::to_string(::getpid())),
      out_(tmp_path_, std::ios::binary | std::ios::trunc) {
  if (!out_) throw std::runtime_error("cannot open for writing: " + tmp_path_);
}

AtomicWriter::~AtomicWriter() {
  if (!committed_) {
    out_.close();
    std::remove(tmp_path_.c_str());
  }
}

void AtomicWriter::commit() {
  if (committed_) return;
  out_.flush();
  if (!out_) throw std::runtime_error("write failed: " + tmp_path_);
  out_.close();
  if (std::rename(tmp_path_.c_str(), path_.c_str()) != 0) {
    std::remove(tmp_path_.c_str());
    throw std::runtime_error("cannot move output into place: " + path_);
  }
  committed_ = true;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw std::runtime_error("read failed: " + path);
  return ss.str();
}

void write_text_file_atomic(const std::string& path, const std::string& text) {
  AtomicWriter w(path);
  w.stream() << text;
  w.commit();
}

}  // namespace numforge::io

#pragma once

#include <fstream>
#include <string>

namespace numforge::io {

// Writes to "<path>.tmp.<pid>" and renames onto `path` on commit, so an
// interrupted run never leaves a partial file at the target. Destruction
// without commit removes the temp file.
class AtomicWriter {
 public:
  explicit AtomicWriter(const std::string& path);
  ~AtomicWriter();

  AtomicWriter(const AtomicWriter&) = delete;
  AtomicWriter& operator=(const AtomicWriter&) = delete;

  std::ostream& stream() { return out_; }
  void commit();

 private:
  std::string path_;
  std::string tmp_path_;
  std::ofstream out_;
  bool committed_ = false;
};

std::string read_text_file(const std::string& path);
void write_text_file_atomic(const std::string& path, const std::string& text);

}  // namespace numforge::io

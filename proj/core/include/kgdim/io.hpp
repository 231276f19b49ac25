#pragma once

#include <fstream>
#include <istream>
#include <memory>
#include <string>

namespace kgdim {

// Opens a file for buffered text reading. Filenames ending in ".gz" are
// inflated transparently. Throws DataError when the file cannot be opened.
std::unique_ptr<std::istream> open_input(const std::string& path);

// Writes to `<path>.tmpXXXX` and renames onto `path` in commit(). If commit
// is never called (error paths, exceptions) the temp file is removed, so a
// failed run leaves no partial output behind.
class AtomicWriter {
public:
  explicit AtomicWriter(std::string path);
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

}  // namespace kgdim

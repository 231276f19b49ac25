#include "kgdim/io.hpp"

#include <unistd.h>
#include <zlib.h>

#include <array>
#include <filesystem>
#include <streambuf>
#include <system_error>

#include "kgdim/error.hpp"

namespace kgdim {

namespace {

class GzStreambuf : public std::streambuf {
public:
  explicit GzStreambuf(const std::string& path)
      : file_(gzopen(path.c_str(), "rb")) {
    if (file_ == nullptr) {
      throw DataError("cannot open input file: " + path);
    }
    gzbuffer(file_, 1 << 17);
  }

  ~GzStreambuf() override {
    if (file_ != nullptr) gzclose(file_);
  }

protected:
  int_type underflow() override {
    if (gptr() < egptr()) return traits_type::to_int_type(*gptr());
    const int n = gzread(file_, buf_.data(), static_cast<unsigned>(buf_.size()));
    if (n < 0) {
      int errnum = 0;
      const char* msg = gzerror(file_, &errnum);
      throw DataError(std::string("gzip read error: ") +
                      (msg != nullptr ? msg : "unknown"));
    }
    if (n == 0) return traits_type::eof();
    setg(buf_.data(), buf_.data(), buf_.data() + n);
    return traits_type::to_int_type(*gptr());
  }

private:
  gzFile file_;
  std::array<char, 1 << 16> buf_{};
};

class GzInputStream : public std::istream {
public:
  explicit GzInputStream(const std::string& path)
      : std::istream(nullptr), buf_(path) {
    rdbuf(&buf_);
    // Rethrow streambuf exceptions (a swallowed gzip error would look like a
    // clean EOF and silently truncate the input).
    exceptions(std::ios::badbit);
  }

private:
  GzStreambuf buf_;
};

}  // namespace

std::unique_ptr<std::istream> open_input(const std::string& path) {
  if (path.ends_with(".gz")) {
    return std::make_unique<GzInputStream>(path);
  }
  auto in = std::make_unique<std::ifstream>(path, std::ios::binary);
  if (!*in) throw DataError("cannot open input file: " + path);
  in->exceptions(std::ios::badbit);
  return in;
}

AtomicWriter::AtomicWriter(std::string path) : path_(std::move(path)) {
  tmp_path_ = path_ + ".tmp" + std::to_string(::getpid());
  out_.open(tmp_path_, std::ios::binary | std::ios::trunc);
  if (!out_) throw DataError("cannot open output file: " + tmp_path_);
}

AtomicWriter::~AtomicWriter() {
  if (!committed_) {
    out_.close();
    std::error_code ec;
    std::filesystem::remove(tmp_path_, ec);
  }
}

void AtomicWriter::commit() {
  out_.flush();
  if (!out_) throw DataError("write failed: " + tmp_path_);
  out_.close();
  std::error_code ec;
  std::filesystem::rename(tmp_path_, path_, ec);
  if (ec) {
    throw DataError("cannot rename " + tmp_path_ + " -> " + path_ + ": " +
                    ec.message());
  }
  committed_ = true;
}

}  // namespace kgdim

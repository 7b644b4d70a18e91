#include "facesym/detector.hpp"

#include <fcntl.h>
#include <signal.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <thread>

#include "facesym/errors.hpp"

extern char** environ;

namespace facesym {

namespace {

class Fd {
 public:
  Fd() = default;
  explicit Fd(int fd) : fd_(fd) {}
  ~Fd() { reset(); }
  Fd(Fd&& other) noexcept : fd_(std::exchange(other.fd_, -1)) {}
  Fd& operator=(Fd&& other) noexcept {
    if (this != &other) {
      reset();
      fd_ = std::exchange(other.fd_, -1);
    }
    return *this;
  }
  int get() const { return fd_; }
  void reset() {
    if (fd_ >= 0) ::close(fd_);
    fd_ = -1;
  }

 private:
  int fd_ = -1;
};

void make_pipe(Fd& read_end, Fd& write_end) {
  int fds[2];
  if (::pipe2(fds, O_CLOEXEC) != 0) {
    throw std::runtime_error(std::string("pipe: ") + std::strerror(errno));
  }
  read_end = Fd(fds[0]);
  write_end = Fd(fds[1]);
}

// Writes every path; stops quietly if the child closes its end early.
void feed_paths(Fd fd, std::span<const std::filesystem::path> paths) {
  sigset_t block;
  sigemptyset(&block);
  sigaddset(&block, SIGPIPE);
  pthread_sigmask(SIG_BLOCK, &block, nullptr);

  for (const auto& path : paths) {
    const std::string line = path.string() + "\n";
    std::size_t done = 0;
    while (done < line.size()) {
      const ssize_t n = ::write(fd.get(), line.data() + done, line.size() - done);
      if (n < 0) {
        if (errno == EINTR) continue;
        return;
      }
      done += static_cast<std::size_t>(n);
    }
  }
}

class LineReader {
 public:
  explicit LineReader(int fd) : fd_(fd) {}

  bool next(std::string& line) {
    line.clear();
    for (;;) {
      const auto nl = buffer_.find('\n', scan_from_);
      if (nl != std::string::npos) {
        line.assign(buffer_, 0, nl);
        buffer_.erase(0, nl + 1);
        scan_from_ = 0;
        return true;
      }
      scan_from_ = buffer_.size();
      char chunk[4096];
      const ssize_t n = ::read(fd_, chunk, sizeof(chunk));
      if (n < 0 && errno == EINTR) continue;
      if (n <= 0) {
        if (buffer_.empty()) return false;
        line.swap(buffer_);
        buffer_.clear();
        scan_from_ = 0;
        return true;
      }
      buffer_.append(chunk, static_cast<std::size_t>(n));
    }
  }

 private:
  int fd_;
  std::string buffer_;
  std::size_t scan_from_ = 0;
};

}  // namespace

std::vector<SidecarRecord> run_detector(
    const std::string& command,
    std::span<const std::filesystem::path> frame_paths) {
  Fd child_in_r, child_in_w, child_out_r, child_out_w;
  make_pipe(child_in_r, child_in_w);
  make_pipe(child_out_r, child_out_w);

  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  posix_spawn_file_actions_adddup2(&actions, child_in_r.get(), STDIN_FILENO);
  posix_spawn_file_actions_adddup2(&actions, child_out_w.get(), STDOUT_FILENO);

  const char* argv[] = {"sh", "-c", command.c_str(), nullptr};
  pid_t pid = 0;
  const int rc = posix_spawn(&pid, "/bin/sh", &actions, nullptr,
                             const_cast<char* const*>(argv), environ);
  posix_spawn_file_actions_destroy(&actions);
  if (rc != 0) {
    throw InputError("detector: cannot start '" + command +
                     "': " + std::strerror(rc));
  }
  child_in_r.reset();
  child_out_w.reset();

  std::thread writer(feed_paths, std::move(child_in_w), frame_paths);

  std::vector<SidecarRecord> records;
  std::string parse_failure;
  {
    LineReader reader(child_out_r.get());
    std::string line;
    while (records.size() < frame_paths.size() && reader.next(line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      try {
        records.push_back(parse_landmark_sidecar(line));
      } catch (const InputError& e) {
        parse_failure = e.what();
        break;
      }
    }
    // Drain so the child never blocks on a full pipe.
    while (reader.next(line)) {
    }
  }
  child_out_r.reset();
  writer.join();

  int status = 0;
  while (::waitpid(pid, &status, 0) < 0 && errno == EINTR) {
  }

  if (WIFSIGNALED(status)) {
    throw InputError("detector: '" + command + "' killed by signal " +
                     std::to_string(WTERMSIG(status)));
  }
  if (WIFEXITED(status) && WEXITSTATUS(status) != 0) {
    throw InputError("detector: '" + command + "' exited with status " +
                     std::to_string(WEXITSTATUS(status)));
  }
  if (!parse_failure.empty()) {
    throw InputError("detector output line " +
                     std::to_string(records.size() + 1) + ": " + parse_failure);
  }
  if (records.size() != frame_paths.size()) {
    throw InputError("detector: expected " + std::to_string(frame_paths.size()) +
                     " records, got " + std::to_string(records.size()));
  }
  return records;
}

}  // namespace facesym

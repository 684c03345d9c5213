#pragma once

#include <fcgs/fcgs.h>

#include <memory>
#include <stdexcept>
#include <string>

namespace fcgs_cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitIo = 3,
  kExitData = 4,
  kExitNumeric = 5,
};

// Carries the process exit code up to the command dispatcher.
class Failure : public std::runtime_error {
 public:
  Failure(int exit_code, const std::string& message)
      : std::runtime_error(message), exit_code_(exit_code) {}
  int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

int exit_code_for(fcgs_status status);

// Throws Failure when `status` is not FCGS_OK; `stage` prefixes the message.
void check(fcgs_status status, const std::string& stage);

template <typename T, void (*Free)(T*)>
struct HandleDeleter {
  void operator()(T* p) const { Free(p); }
};

template <typename T, void (*Free)(T*)>
using Handle = std::unique_ptr<T, HandleDeleter<T, Free>>;

using SequenceList = Handle<fcgs_sequence_list, fcgs_sequence_list_free>;
using Sequence = Handle<fcgs_sequence, fcgs_sequence_free>;
using Annotations = Handle<fcgs_annotations, fcgs_annotations_free>;
using Fcgr = Handle<fcgs_fcgr, fcgs_fcgr_free>;
using Signal = Handle<fcgs_signal, fcgs_signal_free>;
using Scalogram = Handle<fcgs_scalogram, fcgs_scalogram_free>;
using Profile = Handle<fcgs_profile, fcgs_profile_free>;
using Regions = Handle<fcgs_regions, fcgs_regions_free>;
using Buffer = Handle<fcgs_buffer, fcgs_buffer_free>;

// Calls `fn(&raw)` and wraps the produced handle.
template <typename H, typename Fn>
H make(const std::string& stage, Fn&& fn) {
  typename H::pointer raw = nullptr;
  check(fn(&raw), stage);
  return H(raw);
}

}  // namespace fcgs_cli

#include "handles.hpp"

namespace fcgs_cli {

int exit_code_for(fcgs_status status) {
  switch (status) {
    case FCGS_OK:
      return kExitOk;
    case FCGS_ERR_IO:
    case FCGS_ERR_FETCH:
      return kExitIo;
    case FCGS_ERR_CONFIG:
    case FCGS_ERR_INVALID_ARGUMENT:
      return kExitUsage;
    case FCGS_ERR_INVALID_SCALE:
    case FCGS_ERR_INVALID_PARAMETER:
    case FCGS_ERR_ORDER_TOO_LARGE:
    case FCGS_ERR_EMPTY_BAND:
    case FCGS_ERR_OUT_OF_MEMORY:
    case FCGS_ERR_INTERNAL:
      return kExitNumeric;
    default:
      return kExitData;
  }
}

void check(fcgs_status status, const std::string& stage) {
  if (status == FCGS_OK) return;
  throw Failure(exit_code_for(status), stage + ": " + fcgs_status_name(status) + ": " +
                                           fcgs_last_error_message());
}

}  // namespace fcgs_cli

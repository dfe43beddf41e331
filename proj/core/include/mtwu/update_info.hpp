#pragma once

namespace mtwu {

/// Record of one predict/update cycle.
///
/// An untriggered cycle always reports delta_sq_norm == 0 and tau == 0.
struct UpdateInfo {
  double loss = 0.0;           // loss at the pre-update prediction
  bool triggered = false;      // the state was changed
  bool mistake = false;        // the pre-update prediction was wrong
  double delta_sq_norm = 0.0;  // squared norm of the weight change
  double tau = 0.0;            // step size used

  static UpdateInfo passive(double loss, bool mistake) {
    return UpdateInfo{loss, false, mistake, 0.0, 0.0};
  }
};

}  // namespace mtwu

package retry

import "time"

// Backoff returns the delay before the given attempt, doubling the initial
// delay each time and never exceeding the configured maximum value.
func Backoff(attempt int, initial, max time.Duration) time.Duration {
	d := initial
	for i := 1; i < attempt; i++ {
		d *= 2 /* the multiplier is fixed at two for every call of this function */
		if d > max {
			return max
		}
	}
	return d
}

#include <vector>

// Υπολογίζει το άθροισμα όλων των στοιχείων του πίνακα και το επιστρέφει στον χρήστη.
long Sum(const std::vector<long>& v) {
  long total = 0;
  for (long x : v) total += x;
  return total;
}

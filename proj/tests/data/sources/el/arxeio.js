// Διαβάζει το αρχείο ρυθμίσεων και επιστρέφει ένα αντικείμενο με τις τιμές του.
function loadConfig(path) {
  const text = require("fs").readFileSync(path, "utf8");
  /* Αν το αρχείο δεν είναι έγκυρο, η συνάρτηση πετάει σφάλμα στον καλούντα. */
  return JSON.parse(text);
}

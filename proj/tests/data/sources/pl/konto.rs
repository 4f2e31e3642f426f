/// Zwraca sumę wszystkich elementów i nie modyfikuje przekazanego wektora w żaden sposób.
fn suma(v: &[i64]) -> i64 {
    v.iter().sum()
}

// Sprawdza, czy liczba jest parzysta, i zwraca wynik jako wartość logiczną dla wywołującego.
fn parzysta(n: i64) -> bool {
    n % 2 == 0
}

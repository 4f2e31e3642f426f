public class Rekening {
    private long saldo;

    /**
     * Controleer de invoer waarde en schrijf het bedrag bij op het saldo van de rekening.
     */
    public void stort(long bedrag) {
        if (bedrag <= 0) {
            throw new IllegalArgumentException("bedrag");
        }
        saldo += bedrag; // het saldo wordt nooit negatief omdat het bedrag altijd groter is dan nul
    }
}

fn main() {
    println!("{}", tailfence::probe(42, 7));
}

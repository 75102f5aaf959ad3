fn main() { println!("{}", lendfair::placeholder()); }

//! Prints every worked example.

fn main() {
    for id in growth_core::figures::FIGURES {
        println!("== figure {id}");
        println!("{}", growth_core::figures::render(id).expect("fixture renders"));
    }
}

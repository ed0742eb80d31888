"""Both sides of the Macdonald type equations, compared degree by degree."""
